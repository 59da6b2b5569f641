#pragma once

// Monomial ideals, affine Hilbert functions by footprint counting, and the
// footprint bound on the number of common zeros in a Cartesian grid.

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cartcodes/error.hpp"
#include "cartcodes/grid.hpp"
#include "cartcodes/polynomial.hpp"

namespace cartcodes::hilbert {

/// True iff some generator divides the monomial.
inline bool ideal_contains(const MonomialIdeal& ideal, const Monomial& mono) {
    if (mono.nvars() != ideal.nvars()) throw Error(ErrorKind::DimensionMismatch, "monomial and ideal live in different rings");
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Monomial& g) { return g.divides(mono); });
}

/// Calls visit(mono) for every monomial in nvars variables of total degree <= u.
template <typename Visit>
void for_each_monomial_up_to(int nvars, int u, Visit&& visit) {
    Monomial mono = Monomial::unit(nvars);
    auto& e = mono.exponents;
    int deg = 0;
    while (true) {
        visit(std::as_const(mono));
        // odometer on the last coordinate first, bounded by the remaining degree
        int i = nvars - 1;
        while (i >= 0) {
            if (deg < u) {
                ++e[static_cast<std::size_t>(i)];
                ++deg;
                break;
            }
            deg -= e[static_cast<std::size_t>(i)];
            e[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
    }
}

/// Number of monomials of degree <= u outside the ideal.
inline std::uint64_t hilbert_fn(const MonomialIdeal& ideal, int u) {
    if (u < 0) throw Error(ErrorKind::DegreeOutOfRange, "Hilbert function argument must be non-negative");
    std::uint64_t total = 0;
    for_each_monomial_up_to(ideal.nvars(), u, [&](const Monomial& mono) {
        if (!ideal_contains(ideal, mono)) ++total;
    });
    return total;
}

/// Graded-lex leading monomial.
inline Monomial leading_term(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no leading term");
    const auto& terms = f.terms();
    return std::max_element(terms.begin(), terms.end(),
                            [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); })
        ->first;
}

/// A basis of span(polys) whose leading terms are pairwise distinct, by Gauss-Jordan
/// elimination with columns in descending graded-lex order. Zero combinations are dropped.
inline std::vector<Polynomial> grlex_echelon(std::span<const Polynomial> polys) {
    if (polys.empty()) return {};
    const auto& field = polys.front().field();
    const int nvars = polys.front().nvars();
    std::vector<Monomial> columns;
    for (const auto& f : polys) {
        if (!(f.field() == field) || f.nvars() != nvars) throw Error(ErrorKind::DimensionMismatch, "polynomials from different rings");
        for (const auto& [mono, c] : f.terms()) columns.push_back(mono);
    }
    std::sort(columns.begin(), columns.end(), [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

    std::vector<std::vector<gf::Elem>> rows;
    for (const auto& f : polys) {
        std::vector<gf::Elem> row;
        for (const auto& mono : columns) row.push_back(f.coefficient(mono).value());
        rows.push_back(std::move(row));
    }
    std::size_t lead = 0;
    for (std::size_t col = 0; col < columns.size() && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[lead]);
        const gf::Elem scale = field.inv(rows[lead][col]);
        for (auto& x : rows[lead]) x = field.mul(x, scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col] == 0) continue;
            const gf::Elem factor = rows[i][col];
            for (std::size_t j = 0; j < columns.size(); ++j) rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[lead][j]));
        }
        ++lead;
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < lead; ++i) {
        Polynomial f(field, nvars);
        for (std::size_t j = 0; j < columns.size(); ++j) f.add_term(columns[j], rows[i][j]);
        out.push_back(std::move(f));
    }
    return out;
}

/// <lts, x_1^{d_1}, ..., x_m^{d_m}>.
inline MonomialIdeal box_ideal(const grid::GridShape& shape, std::span<const Monomial> lts) {
    MonomialIdeal ideal(shape.m());
    for (int i = 0; i < shape.m(); ++i) {
        Monomial g = Monomial::unit(shape.m());
        g.exponents[static_cast<std::size_t>(i)] = shape.dim(i);
        ideal.add(std::move(g));
    }
    for (const auto& lt : lts) ideal.add(lt);
    return ideal;
}

/// |F \ Delta(phi(lts))|: an upper bound on the common zeros in the grid of any
/// polynomials with these distinct leading terms. Leading terms with an exponent
/// >= d_i lie in the box ideal and contribute nothing.
inline std::uint64_t footprint_upper_bound(const grid::GridShape& shape, std::span<const Monomial> lts) {
    for (std::size_t i = 0; i < lts.size(); ++i) {
        if (lts[i].nvars() != shape.m()) throw Error(ErrorKind::DimensionMismatch, "leading term has the wrong number of variables");
        for (std::size_t j = 0; j < i; ++j) {
            if (lts[i] == lts[j]) throw Error(ErrorKind::DuplicateLeadingTerms, "leading terms must be distinct");
        }
    }
    grid::TupleSet images;
    for (const auto& lt : lts) {
        grid::ExpTuple a(lt.exponents);
        if (grid::contains(shape, a)) images.push_back(std::move(a));
    }
    return shape.n() - grid::shadow(shape, images).size();
}

} // namespace cartcodes::hilbert
