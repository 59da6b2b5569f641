#pragma once

// The exponent box F = [0, d_1 - 1] x ... x [0, d_m - 1] with its degree
// grading, the coordinatewise order <=_P and the lexicographic order
// (leftmost coordinate most significant).
//
// Ranks are 1-based: rank r in descending lex order is the tuple whose
// mixed-radix value sum_i a_i prod_{j>i} d_j equals n - r.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cartcodes/error.hpp"

namespace cartcodes {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

inline std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename Int>
Int parse_int(std::string_view text, std::string_view what) {
    text = strip(text);
    Int value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw Error(ErrorKind::ParseError, "cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    }
    return value;
}

/// C(n, k), saturating at the uint64 maximum.
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace detail

namespace grid {

/// Side lengths d_1 <= ... <= d_m of the box F.
class GridShape {
public:
    explicit GridShape(std::vector<int> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw Error(ErrorKind::InvalidShape, "a grid needs at least one coordinate");
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (dims_[i] < 1) throw Error(ErrorKind::InvalidShape, "side lengths must be positive");
            if (i > 0 && dims_[i] < dims_[i - 1]) {
                throw Error(ErrorKind::InvalidShape, "side lengths must be sorted ascending");
            }
            n *= static_cast<std::uint64_t>(dims_[i]);
            if (n > (std::uint64_t{1} << 40)) throw Error(ErrorKind::InvalidShape, "grid too large");
            k_ += dims_[i] - 1;
        }
        n_ = n;
        place_.assign(dims_.size(), 1);
        for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i) place_[i] = place_[i + 1] * dims_[i + 1];
    }

    /// Parses "d1xd2x...xdm".
    static GridShape parse(std::string_view text) {
        std::vector<int> dims;
        for (auto part : detail::split(detail::strip(text), 'x')) dims.push_back(detail::parse_int<int>(part, "grid side"));
        return GridShape(std::move(dims));
    }

    int m() const noexcept { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const noexcept { return dims_; }
    int dim(int i) const { return dims_.at(static_cast<std::size_t>(i)); }
    std::uint64_t n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    /// prod_{j > i} d_j.
    std::uint64_t place(int i) const { return place_.at(static_cast<std::size_t>(i)); }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < dims_.size(); ++i) out += (i ? "x" : "") + std::to_string(dims_[i]);
        return out;
    }

    bool operator==(const GridShape&) const = default;

private:
    std::vector<int> dims_;
    std::vector<std::uint64_t> place_;
    std::uint64_t n_ = 1;
    int k_ = 0;
};

/// A point of F; doubles as the exponent vector of a monomial.
/// Default comparison is the lexicographic order.
struct ExpTuple {
    std::vector<int> coords;

    ExpTuple() = default;
    explicit ExpTuple(std::vector<int> c) : coords(std::move(c)) {}
    ExpTuple(std::initializer_list<int> c) : coords(c) {}

    int size() const noexcept { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

    auto operator<=>(const ExpTuple&) const = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coords.size(); ++i) out += (i ? "," : "") + std::to_string(coords[i]);
        return out;
    }

    static ExpTuple parse(std::string_view text) {
        std::vector<int> c;
        for (auto part : detail::split(detail::strip(text), ',')) c.push_back(detail::parse_int<int>(part, "exponent"));
        return ExpTuple(std::move(c));
    }
};

using TupleSet = std::vector<ExpTuple>;

inline bool contains(const GridShape& shape, const ExpTuple& a) {
    if (a.size() != shape.m()) return false;
    for (int i = 0; i < shape.m(); ++i) {
        if (a[i] < 0 || a[i] >= shape.dim(i)) return false;
    }
    return true;
}

inline void require_in_box(const GridShape& shape, const ExpTuple& a) {
    if (!contains(shape, a)) {
        throw Error(ErrorKind::InvalidSpec, "tuple (" + a.to_string() + ") is not in the box " + shape.to_string());
    }
}

inline int degree(const ExpTuple& a) {
    int sum = 0;
    for (int c : a.coords) sum += c;
    return sum;
}

/// a <=_P b, the coordinatewise order.
inline bool dominated_by(const ExpTuple& a, const ExpTuple& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline std::uint64_t mixed_radix_value(const GridShape& shape, const ExpTuple& a) {
    std::uint64_t value = 0;
    for (int i = 0; i < shape.m(); ++i) value += static_cast<std::uint64_t>(a[i]) * shape.place(i);
    return value;
}

inline ExpTuple tuple_from_value(const GridShape& shape, std::uint64_t value) {
    ExpTuple a(std::vector<int>(static_cast<std::size_t>(shape.m())));
    for (int i = 0; i < shape.m(); ++i) {
        a.coords[static_cast<std::size_t>(i)] = static_cast<int>(value / shape.place(i));
        value %= shape.place(i);
    }
    return a;
}

/// The r-th tuple of F in descending lex order, by the digits of n - r.
inline ExpTuple tuple_at_rank_desc(const GridShape& shape, std::uint64_t r) {
    if (r < 1 || r > shape.n()) {
        throw Error(ErrorKind::RankOutOfRange,
                    "rank " + std::to_string(r) + " outside [1, " + std::to_string(shape.n()) + "]");
    }
    return tuple_from_value(shape, shape.n() - r);
}

/// Inverse of tuple_at_rank_desc.
inline std::uint64_t rank_desc(const GridShape& shape, const ExpTuple& a) {
    require_in_box(shape, a);
    return shape.n() - mixed_radix_value(shape, a);
}

/// b -> (d_1 - 1 - b_1, ..., d_m - 1 - b_m); reverses lex order and maps F_{<=d} onto F_{>=k-d}.
inline ExpTuple complement(const GridShape& shape, const ExpTuple& a) {
    ExpTuple out = a;
    for (int i = 0; i < shape.m(); ++i) out.coords[static_cast<std::size_t>(i)] = shape.dim(i) - 1 - a[i];
    return out;
}

struct DegreeFilter {
    enum class Kind { All, Eq, Le, Ge };
    Kind kind = Kind::All;
    int u = 0;

    static DegreeFilter all() { return {}; }
    static DegreeFilter eq(int u) { return {Kind::Eq, u}; }
    static DegreeFilter le(int u) { return {Kind::Le, u}; }
    static DegreeFilter ge(int u) { return {Kind::Ge, u}; }

    bool accepts(const ExpTuple& a) const {
        const int deg = degree(a);
        switch (kind) {
        case Kind::All: return true;
        case Kind::Eq: return deg == u;
        case Kind::Le: return deg <= u;
        case Kind::Ge: return deg >= u;
        }
        return false;
    }
};

enum class Order { LexAsc, LexDesc };

inline void check_degree(const GridShape& shape, int u) {
    if (u < 0 || u > shape.k()) {
        throw Error(ErrorKind::DegreeOutOfRange,
                    "degree " + std::to_string(u) + " outside [0, " + std::to_string(shape.k()) + "]");
    }
}

inline void check_filter(const GridShape& shape, const DegreeFilter& filter) {
    if (filter.kind != DegreeFilter::Kind::All) check_degree(shape, filter.u);
}

inline TupleSet enumerate(const GridShape& shape, DegreeFilter filter = {}, Order order = Order::LexAsc) {
    check_filter(shape, filter);
    TupleSet out;
    for (std::uint64_t v = 0; v < shape.n(); ++v) {
        ExpTuple a = tuple_from_value(shape, order == Order::LexAsc ? v : shape.n() - 1 - v);
        if (filter.accepts(a)) out.push_back(std::move(a));
    }
    return out;
}

inline std::uint64_t count(const GridShape& shape, DegreeFilter filter) {
    check_filter(shape, filter);
    std::uint64_t total = 0;
    for (std::uint64_t v = 0; v < shape.n(); ++v) total += filter.accepts(tuple_from_value(shape, v)) ? 1 : 0;
    return total;
}

namespace internal {

/// Walks F in the given order via mixed-radix ranks, returning the r-th tuple passing the filter.
inline ExpTuple rth_filtered(const GridShape& shape, DegreeFilter filter, Order order, std::uint64_t r) {
    check_filter(shape, filter);
    if (r >= 1) {
        std::uint64_t seen = 0;
        for (std::uint64_t rank = 1; rank <= shape.n(); ++rank) {
            ExpTuple a = tuple_at_rank_desc(shape, order == Order::LexDesc ? rank : shape.n() + 1 - rank);
            if (filter.accepts(a) && ++seen == r) return a;
        }
    }
    throw Error(ErrorKind::RankOutOfRange, "rank " + std::to_string(r) + " exceeds the size of the filtered set");
}

} // namespace internal

/// r-th element of F_{<=d} in descending lex order.
inline ExpTuple rth_of_deg_le(const GridShape& shape, int d, std::uint64_t r) {
    return internal::rth_filtered(shape, DegreeFilter::le(d), Order::LexDesc, r);
}

/// r-th element of F_{>=u} in ascending lex order.
inline ExpTuple rth_of_deg_ge(const GridShape& shape, int u, std::uint64_t r) {
    return internal::rth_filtered(shape, DegreeFilter::ge(u), Order::LexAsc, r);
}

/// M(r): the first r elements of F_{<=v} in descending lex order.
inline TupleSet first_of_deg_le(const GridShape& shape, int v, std::uint64_t r) {
    TupleSet all = enumerate(shape, DegreeFilter::le(v), Order::LexDesc);
    if (r > all.size()) throw Error(ErrorKind::RankOutOfRange, "r exceeds |F_{<=v}|");
    all.resize(static_cast<std::size_t>(r));
    return all;
}

/// L: the first r elements of the level F_u in descending lex order.
inline TupleSet lex_segment(const GridShape& shape, int u, std::uint64_t r) {
    TupleSet level = enumerate(shape, DegreeFilter::eq(u), Order::LexDesc);
    if (r > level.size()) throw Error(ErrorKind::RankOutOfRange, "segment longer than the level");
    level.resize(static_cast<std::size_t>(r));
    return level;
}

/// Delta(S) = {a in F : b <=_P a for some b in S}, sorted ascending lex.
inline TupleSet shadow(const GridShape& shape, std::span<const ExpTuple> generators) {
    for (const auto& g : generators) require_in_box(shape, g);
    TupleSet out;
    if (generators.empty()) return out;
    for (std::uint64_t v = 0; v < shape.n(); ++v) {
        ExpTuple a = tuple_from_value(shape, v);
        if (std::any_of(generators.begin(), generators.end(), [&](const ExpTuple& g) { return dominated_by(g, a); })) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

/// Delta_v(S) = Delta(S) intersected with F_v.
inline TupleSet shadow_level(const GridShape& shape, std::span<const ExpTuple> generators, int v) {
    check_degree(shape, v);
    TupleSet out = shadow(shape, generators);
    std::erase_if(out, [v](const ExpTuple& a) { return degree(a) != v; });
    return out;
}

/// |Delta(a_1, ..., a_r)| for the first r elements of F_{<=d} in descending lex order,
/// from the mixed-radix value of a_r alone.
inline std::uint64_t lex_segment_shadow_size(const GridShape& shape, int d, std::uint64_t r) {
    return shape.n() - mixed_radix_value(shape, rth_of_deg_le(shape, d, r));
}

/// |Delta(M(r))|, the minimum shadow of an r-subset of F_{<=v}.
inline std::uint64_t min_shadow_size(const GridShape& shape, int v, std::uint64_t r) {
    return lex_segment_shadow_size(shape, v, r);
}

namespace internal {

class UpSets {
public:
    UpSets(const GridShape& shape, const TupleSet& tuples)
        : words_((shape.n() + 63) / 64), bits_(tuples.size() * words_, 0) {
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            for (std::uint64_t v = 0; v < shape.n(); ++v) {
                if (dominated_by(tuples[t], tuple_from_value(shape, v))) bits_[t * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
            }
        }
    }

    std::size_t words() const noexcept { return words_; }
    const std::uint64_t* row(std::size_t t) const { return bits_.data() + t * words_; }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

} // namespace internal

/// Exhaustive minimum of |Delta(S)| over all r-subsets S of F_{<=v}.
inline std::uint64_t brute_min_shadow(const GridShape& shape, int v, std::uint64_t r,
                                      std::uint64_t budget = kDefaultBudget) {
    const TupleSet pool = enumerate(shape, DegreeFilter::le(v), Order::LexDesc);
    if (r < 1 || r > pool.size()) throw Error(ErrorKind::RankOutOfRange, "r outside [1, |F_{<=v}|]");
    const std::uint64_t subsets = cartcodes::detail::binomial_saturating(pool.size(), r);
    if (subsets > budget) {
        throw Error(ErrorKind::InstanceTooLarge,
                    std::to_string(subsets) + " subsets exceed the budget of " + std::to_string(budget));
    }
    const internal::UpSets up(shape, pool);
    const std::size_t words = up.words();
    const auto depth = static_cast<std::size_t>(r);
    // acc[level] holds the union of the first `level` chosen up-sets.
    std::vector<std::uint64_t> acc((depth + 1) * words, 0);
    std::vector<std::size_t> pick(depth);
    std::uint64_t best = shape.n();

    auto extend = [&](std::size_t level) {
        const std::uint64_t* src = acc.data() + level * words;
        std::uint64_t* dst = acc.data() + (level + 1) * words;
        const std::uint64_t* add = up.row(pick[level]);
        for (std::size_t w = 0; w < words; ++w) dst[w] = src[w] | add[w];
    };

    std::size_t level = 0;
    pick[0] = 0;
    while (true) {
        extend(level);
        if (level + 1 == depth) {
            std::uint64_t size = 0;
            const std::uint64_t* cur = acc.data() + depth * words;
            for (std::size_t w = 0; w < words; ++w) size += static_cast<std::uint64_t>(__builtin_popcountll(cur[w]));
            best = std::min(best, size);
            // advance to the next combination
            while (true) {
                if (++pick[level] <= pool.size() - (depth - level)) break;
                if (level == 0) return best;
                --level;
            }
        } else {
            ++level;
            pick[level] = pick[level - 1] + 1;
        }
    }
}

struct InclusionReport {
    bool holds = true;
    TupleSet lhs;  // Delta_{u+1}(L(S))
    TupleSet rhs;  // L(Delta_{u+1}(S))
    std::optional<ExpTuple> counterexample;
};

/// Checks Delta_{u+1}(L(S)) is contained in L(Delta_{u+1}(S)) for S inside the level F_u.
inline InclusionReport check_clements_lindstrom(const GridShape& shape, int u, std::span<const ExpTuple> subset) {
    if (u < 0 || u >= shape.k()) throw Error(ErrorKind::DegreeOutOfRange, "level must satisfy 0 <= u < k");
    for (const auto& a : subset) {
        require_in_box(shape, a);
        if (degree(a) != u) throw Error(ErrorKind::InvalidSpec, "tuple (" + a.to_string() + ") is not on level u");
    }
    TupleSet unique(subset.begin(), subset.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    const TupleSet segment = lex_segment(shape, u, unique.size());
    InclusionReport report;
    report.lhs = shadow_level(shape, segment, u + 1);
    const TupleSet upper = shadow_level(shape, unique, u + 1);
    report.rhs = lex_segment(shape, u + 1, upper.size());
    std::sort(report.rhs.begin(), report.rhs.end());
    for (const auto& a : report.lhs) {
        if (!std::binary_search(report.rhs.begin(), report.rhs.end(), a)) {
            report.holds = false;
            report.counterexample = a;
            break;
        }
    }
    return report;
}

/// Lex-largest element of the level F_u that is <=_lex y, if any.
inline std::optional<ExpTuple> lex_max_below(const GridShape& shape, int u, const ExpTuple& y) {
    std::optional<ExpTuple> best;
    for (auto& a : enumerate(shape, DegreeFilter::eq(u), Order::LexAsc)) {
        if (a <= y) best = std::move(a);
        else break;
    }
    return best;
}

/// For every y in F_v (1 <= v <= k), the lex-largest a in F_{v-1} below y satisfies a <=_P y.
/// Returns the first y violating this, if any.
inline std::optional<ExpTuple> check_lex_predecessor_dominance(const GridShape& shape) {
    for (int v = 1; v <= shape.k(); ++v) {
        for (const auto& y : enumerate(shape, DegreeFilter::eq(v))) {
            const auto a = lex_max_below(shape, v - 1, y);
            if (!a || !dominated_by(*a, y)) return y;
        }
    }
    return std::nullopt;
}

/// |Delta(M(r))| = r - |M_v| + |Delta(M_v)| with M_v = M(r) restricted to F_v; returns both sides.
inline std::pair<std::uint64_t, std::uint64_t> shadow_decomposition(const GridShape& shape, int v, std::uint64_t r) {
    const TupleSet segment = first_of_deg_le(shape, v, r);
    TupleSet top;
    for (const auto& a : segment) {
        if (degree(a) == v) top.push_back(a);
    }
    const std::uint64_t direct = shadow(shape, segment).size();
    const std::uint64_t split = r - top.size() + shadow(shape, top).size();
    return {direct, split};
}

} // namespace grid
} // namespace cartcodes
