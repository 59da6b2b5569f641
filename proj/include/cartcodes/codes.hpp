#pragma once

// Affine Cartesian codes AC_q(d, A): evaluations of polynomials of total
// degree <= d with deg_{x_i} < d_i at the grid A = A_1 x ... x A_m.
//
// Conventions fixed for reproducibility:
//   * point P_j (0-based j) is (gamma_{1,i_1}, ..., gamma_{m,i_m}) where
//     (i_1, ..., i_m) is the j-th index tuple in ascending lex order;
//   * generator rows are the monomials x^a, a in F_{<=d}, in descending lex order.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cartcodes/error.hpp"
#include "cartcodes/gf.hpp"
#include "cartcodes/grid.hpp"
#include "cartcodes/hilbert.hpp"
#include "cartcodes/linalg.hpp"
#include "cartcodes/polynomial.hpp"

namespace cartcodes::codes {

using gf::Elem;
using grid::ExpTuple;
using grid::GridShape;
using hilbert::Polynomial;
using linalg::Matrix;

/// Parses "p^e" (or a bare prime "p").
inline gf::FieldSpec parse_field(std::string_view text) {
    text = cartcodes::detail::strip(text);
    const auto caret = text.find('^');
    const auto p = cartcodes::detail::parse_int<std::uint64_t>(text.substr(0, caret), "field characteristic");
    const int e = caret == std::string_view::npos ? 1 : cartcodes::detail::parse_int<int>(text.substr(caret + 1), "extension degree");
    return gf::field_create(p, e);
}

/// Parses "a,b;c,d,e" into integer-encoded element lists.
inline std::vector<std::vector<Elem>> parse_sets(std::string_view text) {
    std::vector<std::vector<Elem>> sets;
    for (auto part : cartcodes::detail::split(cartcodes::detail::strip(text), ';')) {
        std::vector<Elem> set;
        for (auto item : cartcodes::detail::split(part, ',')) set.push_back(cartcodes::detail::parse_int<Elem>(item, "field element"));
        sets.push_back(std::move(set));
    }
    return sets;
}

inline std::string format_sets(const std::vector<std::vector<Elem>>& sets) {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out += i ? ";" : "";
        for (std::size_t j = 0; j < sets[i].size(); ++j) out += (j ? "," : "") + std::to_string(sets[i][j]);
    }
    return out;
}

/// The grid A = A_1 x ... x A_m over a finite field, without a degree.
class EvaluationGrid {
public:
    EvaluationGrid(gf::FieldSpec field, std::vector<std::vector<Elem>> sets)
        : field_(std::move(field)), sets_(std::move(sets)), shape_(validated_dims(field_, sets_)) {
        // d_1 ... d_m - 1 = sum (d_i - 1) prod_{j>i} d_j
        std::uint64_t top = 0;
        for (int i = 0; i < shape_.m(); ++i) top += static_cast<std::uint64_t>(shape_.dim(i) - 1) * shape_.place(i);
        if (top + 1 != shape_.n()) throw Error(ErrorKind::RankDeficiency, "mixed-radix self-check failed");
    }

    const gf::FieldSpec& field() const noexcept { return field_; }
    const std::vector<std::vector<Elem>>& sets() const noexcept { return sets_; }
    const GridShape& shape() const noexcept { return shape_; }
    std::uint64_t n() const noexcept { return shape_.n(); }
    int k() const noexcept { return shape_.k(); }
    int m() const noexcept { return shape_.m(); }

    /// gamma_{i,t}, 0-based i and t.
    Elem gamma(int i, int t) const { return sets_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(t)); }

private:
    static GridShape validated_dims(const gf::FieldSpec& field, const std::vector<std::vector<Elem>>& sets) {
        if (sets.empty()) throw Error(ErrorKind::InvalidSpec, "at least one evaluation set is required");
        std::vector<int> dims;
        for (const auto& set : sets) {
            if (set.empty()) throw Error(ErrorKind::InvalidSpec, "evaluation sets must be non-empty");
            for (Elem a : set) {
                if (!field.contains(a)) {
                    throw Error(ErrorKind::InvalidSpec, "element " + std::to_string(a) + " is outside GF(" + std::to_string(field.q()) + ")");
                }
            }
            std::vector<Elem> sorted = set;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                throw Error(ErrorKind::InvalidSpec, "evaluation set elements must be distinct");
            }
            if (!dims.empty() && static_cast<int>(set.size()) < dims.back()) {
                throw Error(ErrorKind::InvalidSpec, "evaluation sets must be ordered by ascending size");
            }
            dims.push_back(static_cast<int>(set.size()));
        }
        return GridShape(std::move(dims));
    }

    gf::FieldSpec field_;
    std::vector<std::vector<Elem>> sets_;
    GridShape shape_;
};

/// An affine Cartesian code: a grid plus a degree 1 <= d <= k.
class CartesianCodeSpec {
public:
    CartesianCodeSpec(EvaluationGrid grid, int d) : grid_(std::move(grid)), d_(d) {
        if (d_ < 1 || d_ > grid_.k()) {
            throw Error(ErrorKind::DegreeOutOfRange,
                        "degree " + std::to_string(d_) + " outside [1, " + std::to_string(grid_.k()) + "]");
        }
    }

    CartesianCodeSpec(gf::FieldSpec field, std::vector<std::vector<Elem>> sets, int d)
        : CartesianCodeSpec(EvaluationGrid(std::move(field), std::move(sets)), d) {}

    static CartesianCodeSpec parse(std::string_view field, std::string_view sets, int d) {
        return {parse_field(field), parse_sets(sets), d};
    }

    const EvaluationGrid& grid() const noexcept { return grid_; }
    const gf::FieldSpec& field() const noexcept { return grid_.field(); }
    const GridShape& shape() const noexcept { return grid_.shape(); }
    int d() const noexcept { return d_; }
    std::uint64_t n() const noexcept { return grid_.n(); }
    int k() const noexcept { return grid_.k(); }

private:
    EvaluationGrid grid_;
    int d_;
};

/// Generator matrix with full row rank.
class LinearCode {
public:
    explicit LinearCode(Matrix generator) : generator_(std::move(generator)) {
        if (linalg::rank(generator_) != generator_.rows()) {
            throw Error(ErrorKind::RankDeficiency, "generator matrix does not have full row rank");
        }
    }

    const Matrix& generator() const noexcept { return generator_; }
    const gf::FieldSpec& field() const noexcept { return generator_.field(); }
    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }

private:
    Matrix generator_;
};

struct WeightHierarchy {
    std::vector<std::uint64_t> weights;  // d_1(C), ..., d_K(C)

    bool strictly_increasing() const {
        return std::adjacent_find(weights.begin(), weights.end(), std::greater_equal<>()) == weights.end();
    }
    bool operator==(const WeightHierarchy&) const = default;
};

// ---------------------------------------------------------------------------
// Construction

/// Dimension of S_{<=degree}(A), i.e. |F_{<=degree}|.
inline std::uint64_t dimension(const GridShape& shape, int degree) {
    return grid::count(shape, grid::DegreeFilter::le(degree));
}

/// P_1, ..., P_n as coordinate vectors.
inline std::vector<std::vector<Elem>> points(const EvaluationGrid& g) {
    std::vector<std::vector<Elem>> out;
    out.reserve(static_cast<std::size_t>(g.n()));
    for (std::uint64_t v = 0; v < g.n(); ++v) {
        const ExpTuple idx = grid::tuple_from_value(g.shape(), v);
        std::vector<Elem> point(static_cast<std::size_t>(g.m()));
        for (int i = 0; i < g.m(); ++i) point[static_cast<std::size_t>(i)] = g.gamma(i, idx[i]);
        out.push_back(std::move(point));
    }
    return out;
}

inline std::vector<std::vector<Elem>> points(const CartesianCodeSpec& spec) { return points(spec.grid()); }

/// Rows: evaluations of x^a for a in F_{<=degree}, descending lex. 0 <= degree <= k.
inline Matrix evaluation_matrix(const EvaluationGrid& g, int degree) {
    const auto& f = g.field();
    const auto monomials = grid::enumerate(g.shape(), grid::DegreeFilter::le(degree), grid::Order::LexDesc);
    // powers[i][t][e] = gamma_{i,t}^e
    std::vector<std::vector<std::vector<Elem>>> powers(static_cast<std::size_t>(g.m()));
    for (int i = 0; i < g.m(); ++i) {
        for (int t = 0; t < g.shape().dim(i); ++t) {
            std::vector<Elem> row{f.one()};
            for (int e = 1; e < g.shape().dim(i); ++e) row.push_back(f.mul(row.back(), g.gamma(i, t)));
            powers[static_cast<std::size_t>(i)].push_back(std::move(row));
        }
    }
    Matrix out(f, monomials.size(), static_cast<std::size_t>(g.n()));
    for (std::size_t r = 0; r < monomials.size(); ++r) {
        for (std::uint64_t v = 0; v < g.n(); ++v) {
            const ExpTuple idx = grid::tuple_from_value(g.shape(), v);
            Elem value = f.one();
            for (int i = 0; i < g.m(); ++i) {
                value = f.mul(value, powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(monomials[r][i])]);
            }
            out.at(r, static_cast<std::size_t>(v)) = value;
        }
    }
    return out;
}

inline LinearCode generator_matrix(const CartesianCodeSpec& spec) {
    return LinearCode(evaluation_matrix(spec.grid(), spec.d()));
}

/// (f(P_1), ..., f(P_n)).
inline std::vector<Elem> evaluation_vector(const EvaluationGrid& g, const Polynomial& f) {
    std::vector<Elem> out;
    for (const auto& point : points(g)) out.push_back(f.evaluate(point));
    return out;
}

// ---------------------------------------------------------------------------
// Closed forms

/// 1 + mixed-radix value of the r-th element of F_{>=k-degree} in ascending lex order.
inline std::uint64_t ghw_formula(const GridShape& shape, int degree, std::uint64_t r) {
    grid::check_degree(shape, degree);
    return 1 + grid::mixed_radix_value(shape, grid::rth_of_deg_ge(shape, shape.k() - degree, r));
}

inline std::uint64_t ghw_closed_form(const CartesianCodeSpec& spec, std::uint64_t r) {
    return ghw_formula(spec.shape(), spec.d(), r);
}

/// Maximum number of common zeros in A of r linearly independent polynomials of S_{<=d}(A).
inline std::uint64_t max_common_zeros(const CartesianCodeSpec& spec, std::uint64_t r) {
    return grid::mixed_radix_value(spec.shape(), grid::rth_of_deg_le(spec.shape(), spec.d(), r));
}

/// (d_{j+1} - l) d_{j+2} ... d_m where d = l + sum_{i<=j} (d_i - 1), 0 < l <= d_{j+1} - 1.
inline std::uint64_t min_distance_closed_form(const CartesianCodeSpec& spec) {
    const auto& shape = spec.shape();
    int consumed = 0;
    for (int i = 0; i < shape.m(); ++i) {
        if (consumed + shape.dim(i) - 1 >= spec.d()) {
            const int ell = spec.d() - consumed;
            return static_cast<std::uint64_t>(shape.dim(i) - ell) * shape.place(i);
        }
        consumed += shape.dim(i) - 1;
    }
    throw Error(ErrorKind::DegreeOutOfRange, "degree exceeds k");
}

inline WeightHierarchy hierarchy_at(const GridShape& shape, int degree) {
    WeightHierarchy h;
    const std::uint64_t dim = dimension(shape, degree);
    for (std::uint64_t r = 1; r <= dim; ++r) h.weights.push_back(ghw_formula(shape, degree, r));
    return h;
}

inline WeightHierarchy hierarchy(const CartesianCodeSpec& spec) { return hierarchy_at(spec.shape(), spec.d()); }

/// Reed-Muller specialisation over the full grid F_q^m, evaluated directly in base q.
inline std::uint64_t reed_muller_ghw(std::uint64_t q, int m, int d, std::uint64_t r) {
    const auto low = static_cast<std::int64_t>(m) * static_cast<std::int64_t>(q - 1) - d;
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= q;
    std::uint64_t seen = 0;
    for (std::uint64_t value = 0; value < total; ++value) {
        std::int64_t digit_sum = 0;
        for (std::uint64_t rest = value; rest > 0; rest /= q) digit_sum += static_cast<std::int64_t>(rest % q);
        if (digit_sum >= low && ++seen == r) return 1 + value;
    }
    throw Error(ErrorKind::RankOutOfRange, "r exceeds the dimension of the Reed-Muller code");
}

// ---------------------------------------------------------------------------
// Extremal polynomials

/// f_b = prod_s prod_{t=1}^{b_s} (x_s - gamma_{s,t}).
inline Polynomial extremal_polynomial(const EvaluationGrid& g, const ExpTuple& b) {
    grid::require_in_box(g.shape(), b);
    const auto& f = g.field();
    Polynomial out = Polynomial::constant(f, g.m(), f.one());
    for (int s = 0; s < g.m(); ++s) {
        for (int t = 0; t < b[s]; ++t) {
            out = out * (Polynomial::variable(f, g.m(), s) - Polynomial::constant(f, g.m(), g.gamma(s, t)));
        }
    }
    return out;
}

/// f_{a_1}, ..., f_{a_r} for the first r elements of F_{<=d} in descending lex order.
inline std::vector<Polynomial> extremal_polynomials(const CartesianCodeSpec& spec, std::uint64_t r) {
    if (r < 1 || r > dimension(spec.shape(), spec.d())) throw Error(ErrorKind::RankOutOfRange, "r outside [1, K]");
    std::vector<Polynomial> out;
    for (const auto& b : grid::first_of_deg_le(spec.shape(), spec.d(), r)) out.push_back(extremal_polynomial(spec.grid(), b));
    return out;
}

/// |Z(f_1, ..., f_r) in A| by evaluation at every point.
inline std::uint64_t common_zero_count(const EvaluationGrid& g, std::span<const Polynomial> polys) {
    std::uint64_t zeros = 0;
    for (const auto& point : points(g)) {
        if (std::all_of(polys.begin(), polys.end(), [&](const Polynomial& f) { return f.evaluate(point) == 0; })) ++zeros;
    }
    return zeros;
}

// ---------------------------------------------------------------------------
// Duals

/// g_i'(gamma_{i,t}) = prod_{s != t} (gamma_{i,t} - gamma_{i,s}).
inline Elem derivative_at_root(const EvaluationGrid& g, int i, int t) {
    const auto& f = g.field();
    Elem acc = f.one();
    for (int s = 0; s < g.shape().dim(i); ++s) {
        if (s != t) acc = f.mul(acc, f.sub(g.gamma(i, t), g.gamma(i, s)));
    }
    return acc;
}

/// w_j = (prod_i g_i'(P_j))^{-1} for every point.
inline std::vector<Elem> dual_weights(const EvaluationGrid& g) {
    const auto& f = g.field();
    std::vector<Elem> out;
    for (std::uint64_t v = 0; v < g.n(); ++v) {
        const ExpTuple idx = grid::tuple_from_value(g.shape(), v);
        Elem prod = f.one();
        for (int i = 0; i < g.m(); ++i) prod = f.mul(prod, derivative_at_root(g, i, idx[i]));
        out.push_back(f.inv(prod));
    }
    return out;
}

/// sum_j gamma_{i,j}^ell / g_i'(gamma_{i,j}); equals 1 for ell = d_i - 1 and 0 below.
inline Elem lagrange_sum(const EvaluationGrid& g, int i, int ell) {
    const auto& f = g.field();
    Elem acc = f.zero();
    for (int t = 0; t < g.shape().dim(i); ++t) acc = f.add(acc, f.div(f.pow(g.gamma(i, t), ell), derivative_at_root(g, i, t)));
    return acc;
}

/// The dual as AC_q(k - d - 1, A) with column j scaled by w_j; the zero code (0 x n) when d = k.
inline LinearCode dual_code(const CartesianCodeSpec& spec) {
    const auto& g = spec.grid();
    if (spec.d() == spec.k()) return LinearCode(Matrix(g.field(), 0, static_cast<std::size_t>(g.n())));
    Matrix m = evaluation_matrix(g, spec.k() - spec.d() - 1);
    const auto w = dual_weights(g);
    const auto& f = g.field();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = f.mul(m.at(i, j), w[j]);
    }
    return LinearCode(std::move(m));
}

/// Hierarchy of the dual, i.e. of AC_q(k - d - 1, A); empty when d = k.
inline WeightHierarchy dual_hierarchy(const CartesianCodeSpec& spec) {
    if (spec.d() == spec.k()) return {};
    return hierarchy_at(spec.shape(), spec.k() - spec.d() - 1);
}

struct WeiReport {
    std::vector<std::uint64_t> primal;     // d_r(d, A)
    std::vector<std::uint64_t> reflected;  // n + 1 - d_r(k - d - 1, A)
    bool disjoint = false;
    bool covers = false;
    bool holds() const noexcept { return disjoint && covers; }
};

/// The primal weights and the reflected dual weights partition {1, ..., n}.
inline WeiReport wei_duality_check(const CartesianCodeSpec& spec) {
    if (spec.d() >= spec.k()) throw Error(ErrorKind::DegreeOutOfRange, "Wei duality check needs d <= k - 1");
    WeiReport report;
    report.primal = hierarchy(spec).weights;
    for (auto w : dual_hierarchy(spec).weights) report.reflected.push_back(spec.n() + 1 - w);
    std::set<std::uint64_t> a(report.primal.begin(), report.primal.end());
    std::set<std::uint64_t> b(report.reflected.begin(), report.reflected.end());
    report.disjoint = std::none_of(b.begin(), b.end(), [&](std::uint64_t x) { return a.count(x) != 0; });
    std::set<std::uint64_t> all = a;
    all.insert(b.begin(), b.end());
    report.covers = all.size() == spec.n() && a.size() + b.size() == spec.n() && *all.begin() == 1 &&
                    *all.rbegin() == spec.n();
    return report;
}

// ---------------------------------------------------------------------------
// Brute-force oracles

/// Gaussian binomial [K choose r]_q, saturating at the uint64 maximum.
inline std::uint64_t gaussian_binomial(std::uint64_t K, std::uint64_t r, std::uint64_t q) {
    if (r > K) return 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 result = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
        unsigned __int128 num = 1, den = 1;
        for (std::uint64_t t = 0; t < K - i; ++t) {
            num *= q;
            if (num > kMax) return kMax;
        }
        for (std::uint64_t t = 0; t < i + 1; ++t) den *= q;
        result = result * (num - 1);
        if (result / (den - 1) > kMax) return kMax;
        result /= (den - 1);
    }
    return static_cast<std::uint64_t>(result);
}

/// Visits one r x K reduced row echelon matrix per r-dimensional subspace of GF(q)^K.
/// The argument is row-major, r * K entries.
template <typename Visit>
void for_each_rref(const gf::FieldSpec& field, std::size_t K, std::size_t r, Visit&& visit) {
    if (r == 0 || r > K) return;
    const std::uint64_t q = field.q();
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;
    std::vector<Elem> mat(r * K);
    while (true) {
        std::vector<std::size_t> free_cells;
        std::vector<bool> is_pivot(K, false);
        for (auto p : piv) is_pivot[p] = true;
        std::fill(mat.begin(), mat.end(), 0);
        for (std::size_t i = 0; i < r; ++i) {
            mat[i * K + piv[i]] = 1;
            for (std::size_t c = piv[i] + 1; c < K; ++c) {
                if (!is_pivot[c]) free_cells.push_back(i * K + c);
            }
        }
        while (true) {
            visit(static_cast<const std::vector<Elem>&>(mat));
            std::size_t pos = 0;
            while (pos < free_cells.size() && ++mat[free_cells[pos]] == q) mat[free_cells[pos++]] = 0;
            if (pos == free_cells.size()) break;
        }
        // next pivot combination
        std::size_t i = r;
        while (i > 0 && piv[i - 1] == K - r + (i - 1)) --i;
        if (i == 0) return;
        ++piv[i - 1];
        for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
}

/// Enumeration count of for_each_rref; equals the Gaussian binomial.
inline std::uint64_t count_subspaces(const gf::FieldSpec& field, std::size_t K, std::size_t r) {
    std::uint64_t total = 0;
    for_each_rref(field, K, r, [&](const std::vector<Elem>&) { ++total; });
    return total;
}

/// min |supp(D)| over all r-dimensional subcodes D, by enumerating every subspace once.
inline std::uint64_t brute_ghw(const LinearCode& code, std::uint64_t r, std::uint64_t budget = kDefaultBudget) {
    const std::size_t K = code.dimension(), n = code.length();
    if (r < 1 || r > K) throw Error(ErrorKind::RankOutOfRange, "r outside [1, K]");
    const auto& f = code.field();
    const std::uint64_t subspaces = gaussian_binomial(K, r, f.q());
    if (subspaces > budget) {
        throw Error(ErrorKind::InstanceTooLarge,
                    std::to_string(subspaces) + " subspaces exceed the budget of " + std::to_string(budget));
    }
    const Matrix& gen = code.generator();
    std::uint64_t best = n;
    std::vector<Elem> word(n);
    std::vector<bool> support(n);
    for_each_rref(f, K, static_cast<std::size_t>(r), [&](const std::vector<Elem>& coeffs) {
        std::fill(support.begin(), support.end(), false);
        for (std::size_t i = 0; i < r; ++i) {
            std::fill(word.begin(), word.end(), 0);
            for (std::size_t c = 0; c < K; ++c) {
                const Elem a = coeffs[i * K + c];
                if (a == 0) continue;
                const Elem* row = gen.row(c);
                for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(a, row[j]));
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (word[j] != 0) support[j] = true;
            }
        }
        best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(std::count(support.begin(), support.end(), true)));
    });
    return best;
}

/// Minimum weight over all q^K - 1 nonzero codewords.
inline std::uint64_t brute_min_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget) {
    const std::size_t K = code.dimension(), n = code.length();
    if (K == 0) throw Error(ErrorKind::RankOutOfRange, "the zero code has no minimum distance");
    const auto& f = code.field();
    unsigned __int128 words = 1;
    for (std::size_t i = 0; i < K; ++i) {
        words *= f.q();
        if (words > budget) throw Error(ErrorKind::InstanceTooLarge, "codeword count exceeds the budget");
    }
    const Matrix& gen = code.generator();
    std::vector<Elem> msg(K, 0), word(n);
    std::uint64_t best = n;
    while (true) {
        std::size_t pos = 0;
        while (pos < K && ++msg[pos] == f.q()) msg[pos++] = 0;
        if (pos == K) break;
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t c = 0; c < K; ++c) {
            if (msg[c] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(msg[c], gen.at(c, j)));
        }
        best = std::min<std::uint64_t>(best, static_cast<std::uint64_t>(n - std::count(word.begin(), word.end(), Elem{0})));
    }
    return best;
}

} // namespace cartcodes::codes
