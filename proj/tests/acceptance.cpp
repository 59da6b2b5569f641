// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cartcodes/cartcodes.hpp"
#include "oracles.hpp"

using namespace cartcodes;
using codes::CartesianCodeSpec;
using codes::Elem;
using codes::EvaluationGrid;
using grid::GridShape;

namespace {

constexpr std::uint64_t kSubspaceCap = 1'000'000;

struct Outcome {
    bool ok = true;
    std::string detail;
    std::string failure;

    void fail(const std::string& what) {
        if (ok) failure = what;
        ok = false;
    }
};

// ---------------------------------------------------------------------------
// corpus: q in {2,3,4} x grids, first d_i elements plus a reversed-tail variant

struct Grid {
    std::string label;
    EvaluationGrid grid;
};

std::vector<Grid> corpus() {
    const std::vector<std::vector<int>> shapes{{2}, {3}, {5}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    const std::vector<std::pair<std::uint64_t, int>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}};
    std::vector<Grid> out;
    for (const auto& [p, e] : fields) {
        const auto field = gf::field_create(p, e);
        const auto q = static_cast<int>(field.q());
        for (const auto& dims : shapes) {
            if (*std::max_element(dims.begin(), dims.end()) > q) continue;
            // GF(5) only hosts the one-dimensional length-5 grid
            if (q == 5 && dims != std::vector<int>{5}) continue;
            std::vector<std::vector<Elem>> head, tail;
            for (int di : dims) {
                std::vector<Elem> a, b;
                for (int t = 0; t < di; ++t) {
                    a.push_back(static_cast<Elem>(t));
                    b.push_back(static_cast<Elem>(q - 1 - t));
                }
                head.push_back(a);
                tail.push_back(b);
            }
            const std::string name = std::to_string(p) + "^" + std::to_string(e) + " " + GridShape(dims).to_string();
            out.push_back({name + " [" + codes::format_sets(head) + "]", EvaluationGrid(field, head)});
            out.push_back({name + " [" + codes::format_sets(tail) + "]", EvaluationGrid(field, tail)});
        }
    }
    return out;
}

std::string where(const Grid& g, int d, std::uint64_t r = 0) {
    std::ostringstream s;
    s << g.label << " d=" << d;
    if (r) s << " r=" << r;
    return s.str();
}

// ---------------------------------------------------------------------------

Outcome ghw_vs_brute(const std::vector<Grid>& grids) {
    Outcome o;
    std::uint64_t cases = 0, skipped = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& g : grids) {
        for (int d = 1; d <= g.grid.k(); ++d) {
            const CartesianCodeSpec spec(g.grid, d);
            const auto code = codes::generator_matrix(spec);
            for (std::uint64_t r = 1; r <= code.dimension(); ++r) {
                if (codes::gaussian_binomial(code.dimension(), r, spec.field().q()) > kSubspaceCap) {
                    ++skipped;
                    continue;
                }
                ++cases;
                const auto brute = codes::brute_ghw(code, r, kSubspaceCap);
                const auto closed = codes::ghw_closed_form(spec, r);
                if (brute != closed) o.fail(where(g, d, r) + ": closed " + std::to_string(closed) + " brute " + std::to_string(brute));
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 300.0) o.fail("runtime " + std::to_string(secs) + " s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu cases, %llu over the subspace cap, %.1f s", static_cast<unsigned long long>(cases),
                  static_cast<unsigned long long>(skipped), secs);
    o.detail = buf;
    return o;
}

Outcome extremal_attainment(const std::vector<Grid>& grids) {
    Outcome o;
    std::uint64_t cases = 0;
    for (const auto& g : grids) {
        for (int d = 1; d <= g.grid.k(); ++d) {
            const CartesianCodeSpec spec(g.grid, d);
            const auto K = codes::dimension(spec.shape(), d);
            for (std::uint64_t r = 1; r <= K; ++r) {
                ++cases;
                const auto polys = codes::extremal_polynomials(spec, r);
                linalg::Matrix evals(spec.field(), 0, static_cast<std::size_t>(spec.n()));
                for (const auto& f : polys) evals.append_row(codes::evaluation_vector(g.grid, f));
                if (linalg::rank(evals) != r) o.fail(where(g, d, r) + ": rank " + std::to_string(linalg::rank(evals)));
                const auto zeros = codes::common_zero_count(g.grid, polys);
                const auto expected = codes::max_common_zeros(spec, r);
                if (zeros != expected) o.fail(where(g, d, r) + ": zeros " + std::to_string(zeros) + " expected " + std::to_string(expected));
            }
        }
    }
    o.detail = std::to_string(cases) + " cases";
    return o;
}

Outcome min_distance(const std::vector<Grid>& grids) {
    Outcome o;
    std::uint64_t cases = 0;
    for (const auto& g : grids) {
        for (int d = 1; d <= g.grid.k(); ++d) {
            const CartesianCodeSpec spec(g.grid, d);
            const auto code = codes::generator_matrix(spec);
            long double words = 1;
            for (std::size_t i = 0; i < code.dimension(); ++i) words *= static_cast<long double>(spec.field().q());
            if (words > 1e6L) continue;
            ++cases;
            const auto brute = codes::brute_min_distance(code, kSubspaceCap);
            const auto closed = codes::min_distance_closed_form(spec);
            if (brute != closed) o.fail(where(g, d) + ": closed " + std::to_string(closed) + " brute " + std::to_string(brute));
        }
    }
    o.detail = std::to_string(cases) + " specs with q^K <= 10^6";
    return o;
}

Outcome duality(const std::vector<Grid>& grids) {
    Outcome o;
    std::uint64_t specs = 0, ghw_cases = 0;
    for (const auto& g : grids) {
        for (int d = 1; d <= g.grid.k(); ++d) {
            ++specs;
            const CartesianCodeSpec spec(g.grid, d);
            const auto code = codes::generator_matrix(spec);
            const auto dual = codes::dual_code(spec);
            if (code.dimension() + dual.dimension() != spec.n()) o.fail(where(g, d) + ": dimensions do not sum to n");
            if (dual.dimension() == 0) continue;
            if (!linalg::is_zero(linalg::multiply_transpose(code.generator(), dual.generator()))) o.fail(where(g, d) + ": G D^T != 0");
            for (std::uint64_t r = 1; r <= dual.dimension(); ++r) {
                if (codes::gaussian_binomial(dual.dimension(), r, spec.field().q()) > kSubspaceCap) continue;
                ++ghw_cases;
                const auto brute = codes::brute_ghw(dual, r, kSubspaceCap);
                const auto closed = codes::ghw_formula(spec.shape(), spec.k() - d - 1, r);
                if (brute != closed) o.fail(where(g, d, r) + ": dual closed " + std::to_string(closed) + " brute " + std::to_string(brute));
            }
        }
    }
    o.detail = std::to_string(specs) + " specs, " + std::to_string(ghw_cases) + " dual weights";
    return o;
}

Outcome wei(const std::vector<Grid>& grids) {
    Outcome o;
    std::uint64_t cases = 0;
    for (const auto& g : grids) {
        for (int d = 1; d <= g.grid.k(); ++d) {
            ++cases;
            const CartesianCodeSpec spec(g.grid, d);
            if (d == g.grid.k()) {
                // the dual is zero, so the primal hierarchy alone must be 1..n
                const auto h = codes::hierarchy(spec).weights;
                for (std::uint64_t i = 0; i < h.size(); ++i) {
                    if (h[i] != i + 1 || h.size() != spec.n()) o.fail(where(g, d) + ": hierarchy is not 1..n");
                }
                continue;
            }
            const auto report = codes::wei_duality_check(spec);
            if (!report.holds()) o.fail(where(g, d) + ": not a partition of 1..n");
        }
    }
    o.detail = std::to_string(cases) + " specs";
    return o;
}

const std::vector<std::vector<int>> kShadowShapes{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};

Outcome clements_lindstrom() {
    Outcome o;
    std::uint64_t subsets = 0;
    std::mt19937_64 rng(2024);
    for (const auto& dims : kShadowShapes) {
        const GridShape shape(dims);
        for (int u = 0; u < shape.k(); ++u) {
            const auto level = grid::enumerate(shape, grid::DegreeFilter::eq(u));
            auto check = [&](const grid::TupleSet& s) {
                ++subsets;
                const auto report = grid::check_clements_lindstrom(shape, u, s);
                if (!report.holds) o.fail(shape.to_string() + " u=" + std::to_string(u) + ": counterexample (" + report.counterexample->to_string() + ")");
            };
            if (level.size() <= 12) {
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << level.size()); ++mask) {
                    grid::TupleSet s;
                    for (std::size_t i = 0; i < level.size(); ++i) {
                        if (mask >> i & 1) s.push_back(level[i]);
                    }
                    check(s);
                }
            } else {
                for (int trial = 0; trial < 4096; ++trial) {
                    grid::TupleSet s;
                    for (const auto& a : level) {
                        if (rng() & 1) s.push_back(a);
                    }
                    check(s);
                }
            }
        }
    }
    o.detail = std::to_string(subsets) + " subsets, 0 counterexamples";
    if (!o.ok) o.detail = std::to_string(subsets) + " subsets";
    return o;
}

Outcome shadow_minimality() {
    Outcome o;
    std::uint64_t cases = 0;
    for (const auto& dims : kShadowShapes) {
        const GridShape shape(dims);
        for (int v = 0; v <= shape.k(); ++v) {
            const auto pool = grid::count(shape, grid::DegreeFilter::le(v));
            for (std::uint64_t r = 1; r <= std::min<std::uint64_t>(4, pool); ++r) {
                ++cases;
                const auto brute = grid::brute_min_shadow(shape, v, r);
                const auto lex = grid::min_shadow_size(shape, v, r);
                if (brute != lex) {
                    o.fail(shape.to_string() + " v=" + std::to_string(v) + " r=" + std::to_string(r) + ": lex " + std::to_string(lex) +
                           " brute " + std::to_string(brute));
                }
            }
        }
    }
    o.detail = std::to_string(cases) + " cases";
    return o;
}

// random element of S_{<=d}(A): dense coefficients, or a product of linear factors
hilbert::Polynomial random_polynomial(const CartesianCodeSpec& spec, const grid::TupleSet& monomials, std::mt19937_64& rng) {
    const auto& f = spec.field();
    const int m = spec.grid().m();
    if (rng() % 2 == 0) {
        hilbert::Polynomial out(f, m);
        for (const auto& a : monomials) out.add_term(hilbert::Monomial(a.coords), rng() % f.q());
        return out;
    }
    std::vector<int> used(static_cast<std::size_t>(m), 0);
    auto out = hilbert::Polynomial::constant(f, m, 1 + rng() % (f.q() - 1));
    const int factors = static_cast<int>(rng() % static_cast<unsigned>(spec.d() + 1));
    for (int t = 0; t < factors; ++t) {
        const int s = static_cast<int>(rng() % static_cast<unsigned>(m));
        if (used[static_cast<std::size_t>(s)] + 1 >= spec.shape().dim(s)) continue;
        ++used[static_cast<std::size_t>(s)];
        const Elem root = spec.grid().gamma(s, static_cast<int>(rng() % static_cast<unsigned>(spec.shape().dim(s))));
        out = out * (hilbert::Polynomial::variable(f, m, s) - hilbert::Polynomial::constant(f, m, root));
    }
    return out;
}

Outcome footprint(const std::vector<Grid>& grids) {
    Outcome o;
    std::uint64_t tuples = 0, specs = 0, tight = 0;
    std::mt19937_64 rng(7);
    for (const auto& g : grids) {
        for (int d = 1; d <= g.grid.k(); ++d) {
            ++specs;
            const CartesianCodeSpec spec(g.grid, d);
            const auto monomials = grid::enumerate(spec.shape(), grid::DegreeFilter::le(d));
            const auto K = monomials.size();
            int accepted = 0;
            while (accepted < 1000) {
                const std::size_t r = std::min<std::size_t>(1 + rng() % 3, K);
                std::vector<hilbert::Polynomial> polys;
                for (std::size_t i = 0; i < r; ++i) polys.push_back(random_polynomial(spec, monomials, rng));
                const auto basis = hilbert::grlex_echelon(polys);
                if (basis.size() != r) continue;
                ++accepted;
                std::vector<hilbert::Monomial> lts;
                for (const auto& b : basis) lts.push_back(hilbert::leading_term(b));
                const auto zeros = codes::common_zero_count(g.grid, polys);
                const auto bound = hilbert::footprint_upper_bound(spec.shape(), lts);
                const auto hilb = hilbert::hilbert_fn(hilbert::box_ideal(spec.shape(), lts), spec.k());
                if (zeros > bound) o.fail(where(g, d) + ": " + std::to_string(zeros) + " zeros exceed bound " + std::to_string(bound));
                if (bound != hilb) o.fail(where(g, d) + ": bound " + std::to_string(bound) + " != hilbert " + std::to_string(hilb));
                if (zeros == bound) ++tight;
            }
            tuples += static_cast<std::uint64_t>(accepted);
        }
    }
    o.detail = std::to_string(tuples) + " tuples over " + std::to_string(specs) + " specs, " + std::to_string(tight) + " attain the bound";
    return o;
}

void ascending_shapes(std::vector<int>& dims, std::uint64_t n, std::vector<std::vector<int>>& out) {
    if (!dims.empty()) out.push_back(dims);
    const int lo = dims.empty() ? 2 : dims.back();
    for (int next = lo; n * static_cast<std::uint64_t>(next) <= 1000; ++next) {
        dims.push_back(next);
        ascending_shapes(dims, n * static_cast<std::uint64_t>(next), out);
        dims.pop_back();
    }
}

Outcome rank_unrank() {
    Outcome o;
    std::vector<std::vector<int>> shapes;
    std::vector<int> scratch;
    ascending_shapes(scratch, 1, shapes);
    std::uint64_t tuples = 0;
    for (const auto& dims : shapes) {
        const GridShape shape(dims);
        auto expected = oracle::box(dims);
        std::reverse(expected.begin(), expected.end());
        const auto listed = grid::enumerate(shape, grid::DegreeFilter::all(), grid::Order::LexDesc);
        if (listed.size() != expected.size()) {
            o.fail(shape.to_string() + ": size");
            continue;
        }
        std::set<std::uint64_t> seen;
        for (std::uint64_t r = 1; r <= shape.n(); ++r) {
            ++tuples;
            const auto a = grid::tuple_at_rank_desc(shape, r);
            if (a.coords != expected[r - 1] || listed[r - 1].coords != expected[r - 1]) o.fail(shape.to_string() + " rank " + std::to_string(r) + ": order");
            const auto back = grid::rank_desc(shape, a);
            if (back != r) o.fail(shape.to_string() + " rank " + std::to_string(r) + ": rank_desc gives " + std::to_string(back));
            seen.insert(back);
        }
        if (seen.size() != shape.n()) o.fail(shape.to_string() + ": not a bijection");
    }
    o.detail = std::to_string(shapes.size()) + " shapes, " + std::to_string(tuples) + " tuples";
    return o;
}

Outcome reed_muller() {
    Outcome o;
    std::uint64_t cases = 0;
    for (std::uint64_t q : {2U, 3U}) {
        for (int m = 1; m <= 3; ++m) {
            const GridShape shape(std::vector<int>(static_cast<std::size_t>(m), static_cast<int>(q)));
            for (int d = 0; d <= shape.k(); ++d) {
                const auto h = codes::hierarchy_at(shape, d).weights;
                for (std::uint64_t r = 1; r <= h.size(); ++r) {
                    ++cases;
                    const auto rm = codes::reed_muller_ghw(q, m, d, r);
                    if (rm != h[r - 1]) {
                        o.fail("q=" + std::to_string(q) + " m=" + std::to_string(m) + " d=" + std::to_string(d) + " r=" + std::to_string(r) +
                               ": general " + std::to_string(h[r - 1]) + " reed-muller " + std::to_string(rm));
                    }
                }
            }
        }
    }
    o.detail = std::to_string(cases) + " weights";
    return o;
}

} // namespace

int main() {
    const auto grids = corpus();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"ghw closed form = brute_ghw", [&] { return ghw_vs_brute(grids); }},
        {"extremal polynomials attain max common zeros", [&] { return extremal_attainment(grids); }},
        {"min distance closed form = exhaustive", [&] { return min_distance(grids); }},
        {"dual code orthogonality, dimension and hierarchy", [&] { return duality(grids); }},
        {"Wei duality partitions 1..n", [&] { return wei(grids); }},
        {"Clements-Lindstrom inclusion", clements_lindstrom},
        {"lex segment shadow is minimal", shadow_minimality},
        {"footprint bound on common zeros", [&] { return footprint(grids); }},
        {"rank/unrank bijection and order", rank_unrank},
        {"Reed-Muller specialisation", reed_muller},
    };
    std::printf("corpus: %zu grids\n", grids.size());
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s %zu %s (%s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                    o.ok ? "" : " first failure: ", o.failure.c_str());
        std::fflush(stdout);
        failures += o.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
