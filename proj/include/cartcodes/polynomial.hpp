#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cartcodes/error.hpp"
#include "cartcodes/gf.hpp"
#include "cartcodes/grid.hpp"

namespace cartcodes::hilbert {

/// Exponent vector of a monomial; entries are unbounded, unlike grid::ExpTuple.
/// The default ordering is plain lex and only serves as a container key.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {
        for (int x : exponents) {
            if (x < 0) throw Error(ErrorKind::InvalidSpec, "negative exponent");
        }
    }
    Monomial(std::initializer_list<int> e) : Monomial(std::vector<int>(e)) {}

    static Monomial unit(int m) { return Monomial(std::vector<int>(static_cast<std::size_t>(m), 0)); }
    static Monomial from_tuple(const grid::ExpTuple& a) { return Monomial(a.coords); }

    int nvars() const noexcept { return static_cast<int>(exponents.size()); }
    int operator[](int i) const { return exponents[static_cast<std::size_t>(i)]; }

    int degree() const {
        int sum = 0;
        for (int x : exponents) sum += x;
        return sum;
    }

    /// Coordinatewise divisibility: this | other.
    bool divides(const Monomial& other) const {
        for (int i = 0; i < nvars(); ++i) {
            if ((*this)[i] > other[i]) return false;
        }
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars()) throw Error(ErrorKind::DimensionMismatch, "monomials in different rings");
        Monomial out = a;
        for (int i = 0; i < a.nvars(); ++i) out.exponents[static_cast<std::size_t>(i)] += b[i];
        return out;
    }

    auto operator<=>(const Monomial&) const = default;

    std::string to_string() const { return grid::ExpTuple(exponents).to_string(); }
    static Monomial parse(std::string_view text) { return Monomial(grid::ExpTuple::parse(text).coords); }
};

/// Graded lex: total degree first, then lex with x_1 most significant.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
}

/// Monomial ideal kept with a minimal generating set (no generator divides another).
class MonomialIdeal {
public:
    explicit MonomialIdeal(int nvars, std::vector<Monomial> generators = {}) : nvars_(nvars) {
        if (nvars < 1) throw Error(ErrorKind::DimensionMismatch, "an ideal needs at least one variable");
        for (auto& g : generators) add(std::move(g));
    }

    /// Parses semicolon-joined monomials, e.g. "2,0;0,3".
    static MonomialIdeal parse(int nvars, std::string_view text) {
        MonomialIdeal ideal(nvars);
        text = cartcodes::detail::strip(text);
        if (text.empty()) return ideal;
        for (auto part : cartcodes::detail::split(text, ';')) ideal.add(Monomial::parse(part));
        return ideal;
    }

    void add(Monomial g) {
        if (g.nvars() != nvars_) throw Error(ErrorKind::DimensionMismatch, "generator has the wrong number of variables");
        if (std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); })) return;
        std::erase_if(gens_, [&](const Monomial& h) { return g.divides(h); });
        gens_.push_back(std::move(g));
        std::sort(gens_.begin(), gens_.end());
    }

    int nvars() const noexcept { return nvars_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ";" : "") + gens_[i].to_string();
        return out;
    }

private:
    int nvars_;
    std::vector<Monomial> gens_;
};

/// Sparse multivariate polynomial over a finite field; zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Monomial, gf::Elem>;

    Polynomial(gf::FieldSpec field, int nvars) : field_(std::move(field)), nvars_(nvars) {
        if (nvars < 1) throw Error(ErrorKind::DimensionMismatch, "a polynomial needs at least one variable");
    }

    static Polynomial constant(const gf::FieldSpec& field, int nvars, gf::Elem c) {
        Polynomial f(field, nvars);
        f.add_term(Monomial::unit(nvars), c);
        return f;
    }

    /// x_i, 0-based index.
    static Polynomial variable(const gf::FieldSpec& field, int nvars, int i) {
        Polynomial f(field, nvars);
        Monomial mono = Monomial::unit(nvars);
        mono.exponents.at(static_cast<std::size_t>(i)) = 1;
        f.add_term(std::move(mono), field.one());
        return f;
    }

    const gf::FieldSpec& field() const noexcept { return field_; }
    int nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    gf::FieldElement coefficient(const Monomial& mono) const {
        const auto it = terms_.find(mono);
        return field_.element(it == terms_.end() ? 0 : it->second);
    }

    void add_term(Monomial mono, gf::Elem c) {
        if (mono.nvars() != nvars_) throw Error(ErrorKind::DimensionMismatch, "term has the wrong number of variables");
        if (!field_.contains(c)) throw Error(ErrorKind::InvalidSpec, "coefficient outside the field");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(mono), c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    int total_degree() const {
        int deg = -1;
        for (const auto& [mono, c] : terms_) deg = std::max(deg, mono.degree());
        return deg;
    }

    int degree_in(int i) const {
        int deg = -1;
        for (const auto& [mono, c] : terms_) deg = std::max(deg, mono[i]);
        return deg;
    }

    gf::Elem evaluate(std::span<const gf::Elem> point) const {
        if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorKind::DimensionMismatch, "point has the wrong length");
        gf::Elem acc = 0;
        for (const auto& [mono, c] : terms_) {
            gf::Elem term = c;
            for (int i = 0; i < nvars_; ++i) {
                if (mono[i] > 0) term = field_.mul(term, field_.pow(point[static_cast<std::size_t>(i)], mono[i]));
            }
            acc = field_.add(acc, term);
        }
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        Polynomial out = a;
        for (const auto& [mono, c] : b.terms_) out.add_term(mono, c);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        Polynomial out = a;
        for (const auto& [mono, c] : b.terms_) out.add_term(mono, a.field_.neg(c));
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        Polynomial out(a.field_, a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.field_.mul(ca, cb));
        }
        return out;
    }

    Polynomial scaled(gf::Elem c) const {
        Polynomial out(field_, nvars_);
        for (const auto& [mono, coeff] : terms_) out.add_term(mono, field_.mul(coeff, c));
        return out;
    }

    bool operator==(const Polynomial& other) const {
        return field_ == other.field_ && nvars_ == other.nvars_ && terms_ == other.terms_;
    }

    /// Terms in descending graded-lex order, e.g. "x1^2 + 2*x1*x2 + 1"; coefficients use the integer encoding.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, gf::Elem>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
        std::string out;
        for (std::size_t t = 0; t < sorted.size(); ++t) {
            const auto& [mono, c] = sorted[t];
            std::string factors;
            for (int i = 0; i < nvars_; ++i) {
                if (mono[i] == 0) continue;
                factors += (factors.empty() ? "" : "*") + std::string("x") + std::to_string(i + 1);
                if (mono[i] > 1) factors += "^" + std::to_string(mono[i]);
            }
            std::string term;
            if (factors.empty()) term = std::to_string(c);
            else if (c == 1) term = factors;
            else term = std::to_string(c) + "*" + factors;
            out += (t ? " + " : "") + term;
        }
        return out;
    }

private:
    static void check_compatible(const Polynomial& a, const Polynomial& b) {
        if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
        if (a.nvars_ != b.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomials in different rings");
    }

    gf::FieldSpec field_;
    int nvars_;
    Terms terms_;
};

} // namespace cartcodes::hilbert
