#pragma once

// Exact arithmetic in GF(p^e) using a polynomial basis modulo the
// lexicographically smallest monic irreducible of degree e.
//
// Elements travel as their mixed-radix integer encoding
// c_0 + c_1 p + ... + c_{e-1} p^{e-1}; FieldElement is the checked wrapper,
// while FieldSpec exposes the raw operations used by the matrix code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cartcodes/error.hpp"

namespace cartcodes::gf {

/// Mixed-radix encoding of a field element, in [0, q).
using Elem = std::uint64_t;

inline constexpr int kMaxDegree = 16;
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;
inline constexpr std::uint64_t kTableOrder = 256;

namespace detail {

using u128 = unsigned __int128;
/// Dense polynomial over GF(p), low degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b;  // p <= 2^62, no overflow
    return s >= p ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    a %= p;
    while (n > 0) {
        if (n & 1U) result = mulmod(result, a, p);
        a = mulmod(a, a, p);
        n >>= 1U;
    }
    return result;
}

/// Inverse modulo prime p by the extended Euclidean algorithm; a must be nonzero mod p.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    __int128 old_r = static_cast<__int128>(a % p), r = p;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quot = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - quot * r};
        std::tie(old_s, s) = std::pair{s, old_s - quot * s};
    }
    __int128 inv = old_s % static_cast<__int128>(p);
    if (inv < 0) inv += p;
    return static_cast<std::uint64_t>(inv);
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t odd = n - 1;
    int twos = 0;
    while ((odd & 1U) == 0) {
        odd >>= 1U;
        ++twos;
    }
    for (std::uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(base, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < twos; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = addmod(out[i + j], mulmod(a[i], b[j], p), p);
    }
    trim(out);
    return out;
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    const int db = deg(b);
    const std::uint64_t lead_inv = invmod(b.back(), p);
    Poly quot(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    while (deg(a) >= db) {
        const int shift = deg(a) - db;
        const std::uint64_t c = mulmod(a.back(), lead_inv, p);
        quot[shift] = c;
        for (int i = 0; i <= db; ++i) a[shift + i] = submod(a[shift + i], mulmod(c, b[i], p), p);
        trim(a);
    }
    trim(quot);
    return {std::move(quot), std::move(a)};
}

inline Poly mod(const Poly& a, const Poly& f, std::uint64_t p) { return divmod(a, f, p).second; }

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t lead_inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, lead_inv, p);
    }
    return a;
}

inline Poly powmod_poly(Poly base, std::uint64_t n, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = mod(base, f, p);
    while (n > 0) {
        if (n & 1U) result = mod(mul(result, base, p), f, p);
        base = mod(mul(base, base, p), f, p);
        n >>= 1U;
    }
    return result;
}

/// Rabin's test: f of degree e is irreducible iff x^(p^e) = x mod f and
/// gcd(x^(p^(e/r)) - x, f) = 1 for every prime r dividing e.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const int e = deg(f);
    if (e <= 0) return false;
    if (e == 1) return true;
    // frob[i] = x^(p^i) mod f
    std::vector<Poly> frob{Poly{0, 1}};
    for (int i = 1; i <= e; ++i) frob.push_back(powmod_poly(frob.back(), p, f, p));
    const Poly x{0, 1};
    if (!sub(frob[e], x, p).empty()) return false;
    for (int r = 2; r <= e; ++r) {
        if (e % r != 0 || !is_prime(static_cast<std::uint64_t>(r))) continue;
        if (deg(gcd(f, sub(frob[e / r], x, p), p)) != 0) return false;
    }
    return true;
}

struct FieldData {
    std::uint64_t p{};
    int e{};
    std::uint64_t q{};
    Poly modulus;  // monic, degree e
    std::vector<std::uint64_t> place;  // p^i
    // Lookup tables, populated when q <= kTableOrder.
    std::vector<Elem> add_table;
    std::vector<Elem> mul_table;
    std::vector<Elem> inv_table;
    std::vector<Elem> neg_table;
};

} // namespace detail

class FieldElement;

/// An immutable finite field GF(p^e). Cheap to copy; copies share state.
class FieldSpec {
public:
    /// Builds GF(p^e) with the lexicographically smallest monic irreducible modulus
    /// (coefficients compared from the constant term upwards).
    static FieldSpec create(std::uint64_t p, int e) {
        if (e < 1 || e > kMaxDegree) {
            throw Error(ErrorKind::DegreeOutOfRange, "extension degree must be in [1, 16], got " + std::to_string(e));
        }
        if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");

        auto data = std::make_shared<detail::FieldData>();
        data->p = p;
        data->e = e;
        std::uint64_t q = 1;
        for (int i = 0; i < e; ++i) {
            data->place.push_back(q);
            if (q > kMaxOrder / p) {
                throw Error(ErrorKind::FieldTooLarge,
                            std::to_string(p) + "^" + std::to_string(e) + " exceeds the supported field order");
            }
            q *= p;
        }
        data->q = q;
        data->modulus = smallest_irreducible(p, e);
        if (q <= kTableOrder) build_tables(*data);
        return FieldSpec(std::move(data));
    }

    std::uint64_t p() const noexcept { return data_->p; }
    int e() const noexcept { return data_->e; }
    std::uint64_t q() const noexcept { return data_->q; }
    /// Monic modulus, coefficients low degree first (length e + 1).
    const std::vector<std::uint64_t>& modulus() const noexcept { return data_->modulus; }

    bool operator==(const FieldSpec& other) const noexcept {
        return data_ == other.data_ || (p() == other.p() && e() == other.e() && modulus() == other.modulus());
    }

    bool contains(Elem a) const noexcept { return a < q(); }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    std::vector<std::uint64_t> coeffs(Elem a) const {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(e()));
        for (auto& digit : c) {
            digit = a % p();
            a /= p();
        }
        return c;
    }

    Elem encode(const std::vector<std::uint64_t>& coeffs) const {
        if (coeffs.size() != static_cast<std::size_t>(e())) {
            throw Error(ErrorKind::DimensionMismatch, "coefficient vector must have length e");
        }
        Elem value = 0;
        for (int i = e() - 1; i >= 0; --i) {
            if (coeffs[i] >= p()) throw Error(ErrorKind::InvalidSpec, "coefficient out of range");
            value = value * p() + coeffs[i];
        }
        return value;
    }

    Elem add(Elem a, Elem b) const {
        const auto& d = *data_;
        if (!d.add_table.empty()) return d.add_table[a * d.q + b];
        if (d.e == 1) return detail::addmod(a, b, d.p);
        if (d.p == 2) return a ^ b;
        Elem out = 0;
        for (int i = d.e - 1; i >= 0; --i) {
            out = out * d.p + detail::addmod(a / d.place[i] % d.p, b / d.place[i] % d.p, d.p);
        }
        return out;
    }

    Elem neg(Elem a) const {
        const auto& d = *data_;
        if (!d.neg_table.empty()) return d.neg_table[a];
        if (d.e == 1) return a == 0 ? 0 : d.p - a;
        if (d.p == 2) return a;
        Elem out = 0;
        for (int i = d.e - 1; i >= 0; --i) out = out * d.p + detail::submod(0, a / d.place[i] % d.p, d.p);
        return out;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        const auto& d = *data_;
        if (!d.mul_table.empty()) return d.mul_table[a * d.q + b];
        if (d.e == 1) return detail::mulmod(a, b, d.p);
        return slow_mul(a, b);
    }

    Elem inv(Elem a) const {
        if (a == 0) throw Error(ErrorKind::DivisionByZero, "zero has no inverse");
        const auto& d = *data_;
        if (!d.inv_table.empty()) return d.inv_table[a];
        if (d.e == 1) return detail::invmod(a, d.p);
        return slow_inv(a);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// Square-and-multiply; negative exponents invert first.
    Elem pow(Elem a, std::int64_t n) const {
        std::uint64_t exp = 0;
        if (n < 0) {
            a = inv(a);
            exp = static_cast<std::uint64_t>(-(n + 1)) + 1;
        } else {
            exp = static_cast<std::uint64_t>(n);
        }
        Elem result = one();
        while (exp > 0) {
            if (exp & 1U) result = mul(result, a);
            a = mul(a, a);
            exp >>= 1U;
        }
        return result;
    }

    FieldElement element(Elem value) const;
    /// All q elements in ascending encoding order (zero first).
    std::vector<FieldElement> elements() const;

private:
    explicit FieldSpec(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    static detail::Poly smallest_irreducible(std::uint64_t p, int e) {
        if (e == 1) return {0, 1};
        // A zero constant term means x divides the candidate, so start at c_0 = 1.
        // Candidates are walked with c_0 most significant, then c_1, ...
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(e), 0);
        digits[0] = 1;
        while (true) {
            detail::Poly f(digits.begin(), digits.end());
            f.push_back(1);
            if (detail::is_irreducible(f, p)) return f;
            int pos = e - 1;
            while (pos >= 0 && ++digits[pos] == p) digits[pos--] = 0;
            if (pos < 0) break;
        }
        throw Error(ErrorKind::NotPrime, "no irreducible polynomial found");  // unreachable for prime p
    }

    Elem slow_mul(Elem a, Elem b) const {
        const auto& d = *data_;
        detail::Poly pa = to_poly(a), pb = to_poly(b);
        return from_poly(detail::mod(detail::mul(pa, pb, d.p), d.modulus, d.p));
    }

    Elem slow_inv(Elem a) const {
        const auto& d = *data_;
        // Extended Euclid on (modulus, a): track s with s * a == r (mod modulus).
        detail::Poly old_r = d.modulus, r = to_poly(a);
        detail::Poly old_s{}, s{1};
        while (!r.empty()) {
            auto [quot, rem] = detail::divmod(old_r, r, d.p);
            old_r = std::move(r);
            r = std::move(rem);
            detail::Poly next = detail::sub(old_s, detail::mul(quot, s, d.p), d.p);
            old_s = std::move(s);
            s = std::move(next);
        }
        // old_r is a nonzero constant since the modulus is irreducible.
        const std::uint64_t scale = detail::invmod(old_r[0], d.p);
        for (auto& c : old_s) c = detail::mulmod(c, scale, d.p);
        return from_poly(detail::mod(old_s, d.modulus, d.p));
    }

    detail::Poly to_poly(Elem a) const {
        detail::Poly f = coeffs(a);
        detail::trim(f);
        return f;
    }

    Elem from_poly(const detail::Poly& f) const {
        Elem value = 0;
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) value = value * data_->p + f[i];
        return value;
    }

    static void build_tables(detail::FieldData& d) {
        const auto shared = std::make_shared<detail::FieldData>(d);
        const FieldSpec plain(shared);  // table-free view used to fill the tables
        const auto q = d.q;
        d.add_table.resize(q * q);
        d.mul_table.resize(q * q);
        d.inv_table.assign(q, 0);
        d.neg_table.resize(q);
        for (Elem a = 0; a < q; ++a) {
            d.neg_table[a] = plain.neg(a);
            if (a != 0) d.inv_table[a] = plain.inv(a);
            for (Elem b = 0; b < q; ++b) {
                d.add_table[a * q + b] = plain.add(a, b);
                d.mul_table[a * q + b] = plain.mul(a, b);
            }
        }
    }

    std::shared_ptr<const detail::FieldData> data_;
};

inline FieldSpec field_create(std::uint64_t p, int e) { return FieldSpec::create(p, e); }

/// A field element bound to its field; mixing fields raises FieldMismatch.
class FieldElement {
public:
    FieldElement(FieldSpec field, Elem value) : field_(std::move(field)), value_(value) {
        if (!field_.contains(value_)) throw Error(ErrorKind::InvalidSpec, "element encoding out of range");
    }

    const FieldSpec& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<std::uint64_t> coeffs() const { return field_.coeffs(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_same(a, b);
        return {a.field_, a.field_.div(a.value_, b.value_)};
    }
    FieldElement operator-() const { return {field_, field_.neg(value_)}; }

    FieldElement inv() const { return {field_, field_.inv(value_)}; }
    FieldElement pow(std::int64_t n) const { return {field_, field_.pow(value_, n)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    static void check_same(const FieldElement& a, const FieldElement& b) {
        if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
    }

    FieldSpec field_;
    Elem value_;
};

enum class Op { Add, Sub, Mul, Div };

inline FieldElement arith(const FieldElement& a, const FieldElement& b, Op op) {
    switch (op) {
    case Op::Add: return a + b;
    case Op::Sub: return a - b;
    case Op::Mul: return a * b;
    case Op::Div: return a / b;
    }
    throw Error(ErrorKind::InvalidSpec, "unknown operation");
}

inline FieldElement FieldSpec::element(Elem value) const { return {*this, value}; }

inline std::vector<FieldElement> FieldSpec::elements() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(q()));
    for (Elem v = 0; v < q(); ++v) out.emplace_back(*this, v);
    return out;
}

inline std::vector<FieldElement> elements(const FieldSpec& fs) { return fs.elements(); }

} // namespace cartcodes::gf
