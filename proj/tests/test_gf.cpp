#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cartcodes/gf.hpp"

using namespace cartcodes;
using gf::FieldSpec;

namespace {

std::uint64_t eval_mod(const std::vector<std::uint64_t>& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
    return acc;
}

// Remainder of f by monic g over GF(p), schoolbook.
std::vector<std::uint64_t> rem(std::vector<std::uint64_t> f, const std::vector<std::uint64_t>& g, std::uint64_t p) {
    while (f.size() >= g.size()) {
        const std::uint64_t lead = f.back();
        const std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = (f[shift + i] + p * p - lead * g[i] % p) % p;
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    return f;
}

// Irreducible iff no monic divisor of degree 1..e/2; candidates of degree e walked with c_0 most significant.
std::vector<std::uint64_t> trial_division_modulus(std::uint64_t p, int e) {
    auto monic_of_degree = [&](int deg, std::uint64_t idx) {
        std::vector<std::uint64_t> f(static_cast<std::size_t>(deg) + 1, 0);
        for (int i = deg - 1; i >= 0; --i) {  // c_0 most significant
            f[static_cast<std::size_t>(i)] = idx % p;
            idx /= p;
        }
        // idx digits were consumed from c_{deg-1} up to c_0
        f[static_cast<std::size_t>(deg)] = 1;
        return f;
    };
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const auto f = monic_of_degree(e, idx);
        bool irreducible = true;
        for (int dd = 1; dd <= e / 2 && irreducible; ++dd) {
            std::uint64_t cnt = 1;
            for (int i = 0; i < dd; ++i) cnt *= p;
            for (std::uint64_t j = 0; j < cnt && irreducible; ++j) {
                if (rem(f, monic_of_degree(dd, j), p).empty()) irreducible = false;
            }
        }
        if (irreducible) return f;
    }
    return {};
}

} // namespace

TEST(FieldCreate, PrimeField) {
    const auto f = gf::field_create(2, 1);
    EXPECT_EQ(f.q(), 2U);
    EXPECT_EQ(f.p(), 2U);
    EXPECT_EQ(f.e(), 1);
}

TEST(FieldCreate, Gf4ModulusIsTheOnlyIrreducibleQuadratic) {
    // x^2 + b x + c over GF(2) with no root in {0, 1}
    std::vector<std::vector<std::uint64_t>> irreducible;
    for (std::uint64_t c = 0; c < 2; ++c) {
        for (std::uint64_t b = 0; b < 2; ++b) {
            std::vector<std::uint64_t> f{c, b, 1};
            if (eval_mod(f, 0, 2) != 0 && eval_mod(f, 1, 2) != 0) irreducible.push_back(f);
        }
    }
    ASSERT_EQ(irreducible.size(), 1U);
    EXPECT_EQ(irreducible[0], (std::vector<std::uint64_t>{1, 1, 1}));
    EXPECT_EQ(gf::field_create(2, 2).modulus(), irreducible[0]);
}

TEST(FieldCreate, ModulusMatchesTrialDivision) {
    for (auto [p, e] : {std::pair{2ULL, 3}, {2ULL, 4}, {2ULL, 5}, {2ULL, 6}, {3ULL, 2}, {3ULL, 3}, {3ULL, 4}, {5ULL, 2},
                        {5ULL, 3}, {7ULL, 2}}) {
        SCOPED_TRACE(std::to_string(p) + "^" + std::to_string(e));
        EXPECT_EQ(gf::field_create(p, e).modulus(), trial_division_modulus(p, e));
    }
    EXPECT_EQ(gf::field_create(2, 3).modulus(), (std::vector<std::uint64_t>{1, 0, 1, 1}));
    EXPECT_EQ(gf::field_create(3, 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
}

TEST(FieldCreate, Errors) {
    try {
        gf::field_create(4, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
    }
    EXPECT_THROW(gf::field_create(1, 1), Error);
    for (int e : {0, 17, -1}) {
        try {
            gf::field_create(2, e);
            FAIL();
        } catch (const Error& err) {
            EXPECT_EQ(err.kind(), ErrorKind::DegreeOutOfRange);
        }
    }
    try {
        gf::field_create(2305843009213693951ULL, 2);  // (2^61 - 1)^2
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::FieldTooLarge);
    }
}

TEST(FieldCreate, Deterministic) {
    EXPECT_EQ(gf::field_create(2, 16).modulus(), gf::field_create(2, 16).modulus());
    EXPECT_TRUE(gf::field_create(3, 5) == gf::field_create(3, 5));
    EXPECT_FALSE(gf::field_create(3, 5) == gf::field_create(3, 4));
}

TEST(Arith, Examples) {
    const auto f2 = gf::field_create(2, 1);
    EXPECT_EQ(f2.element(1) + f2.element(1), f2.element(0));

    const auto f4 = gf::field_create(2, 2);
    const auto alpha = f4.element(2);
    EXPECT_EQ(alpha * alpha, f4.element(3));  // alpha + 1
    EXPECT_EQ((alpha * alpha).coeffs(), (std::vector<std::uint64_t>{1, 1}));

    const auto f5 = gf::field_create(5, 1);
    EXPECT_EQ(f5.element(2).inv(), f5.element(3));
    EXPECT_EQ(gf::arith(f5.element(4), f5.element(2), gf::Op::Div), f5.element(2));
    EXPECT_EQ(gf::arith(f5.element(1), f5.element(2), gf::Op::Sub), f5.element(4));
    EXPECT_EQ(f5.element(2).pow(-1), f5.element(3));
}

TEST(Arith, Errors) {
    const auto f5 = gf::field_create(5, 1);
    const auto f7 = gf::field_create(7, 1);
    try {
        (void)f5.element(0).inv();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
    EXPECT_THROW((void)(f5.element(3) / f5.element(0)), Error);
    try {
        (void)(f5.element(1) + f7.element(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
    }
    EXPECT_THROW((void)f5.element(5), Error);
}

TEST(Elements, CanonicalOrder) {
    const auto f2 = gf::field_create(2, 1);
    const auto e2 = gf::elements(f2);
    ASSERT_EQ(e2.size(), 2U);
    EXPECT_EQ(e2[0].value(), 0U);
    EXPECT_EQ(e2[1].value(), 1U);

    const auto f4 = gf::field_create(2, 2);
    std::vector<std::vector<std::uint64_t>> coeffs;
    for (const auto& a : f4.elements()) coeffs.push_back(a.coeffs());
    EXPECT_EQ(coeffs, (std::vector<std::vector<std::uint64_t>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));

    const auto f3 = gf::field_create(3, 1);
    const auto e3 = f3.elements();
    for (std::uint64_t i = 0; i < 3; ++i) EXPECT_EQ(e3[i].value(), i);
}

TEST(Elements, EncodeRoundTrip) {
    const auto f = gf::field_create(3, 3);
    for (gf::Elem a = 0; a < f.q(); ++a) EXPECT_EQ(f.encode(f.coeffs(a)), a);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint64_t, int>> {};

TEST_P(FieldAxioms, RandomTriples) {
    const auto [p, e] = GetParam();
    const auto f = gf::field_create(p, e);
    std::mt19937_64 rng(p * 1000 + static_cast<std::uint64_t>(e));
    std::uniform_int_distribution<gf::Elem> pick(0, f.q() - 1);
    std::set<gf::Elem> distinct;
    for (int trial = 0; trial < 300; ++trial) {
        const gf::Elem a = pick(rng), b = pick(rng), c = pick(rng);
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        EXPECT_EQ(f.add(a, f.zero()), a);
        EXPECT_EQ(f.mul(a, f.one()), a);
        EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
        EXPECT_EQ(f.sub(f.add(a, b), b), a);
        // Frobenius is additive
        EXPECT_EQ(f.pow(f.add(a, b), static_cast<std::int64_t>(p)),
                  f.add(f.pow(a, static_cast<std::int64_t>(p)), f.pow(b, static_cast<std::int64_t>(p))));
        if (a != 0) {
            EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
            EXPECT_EQ(f.pow(a, static_cast<std::int64_t>(f.q() - 1)), f.one());
            EXPECT_EQ(f.pow(a, -3), f.inv(f.pow(a, 3)));
            EXPECT_EQ(f.div(f.mul(b, a), a), b);
        }
        distinct.insert(a);
    }
    if (f.q() <= 64) {
        EXPECT_EQ(f.elements().size(), f.q());
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(std::pair{2ULL, 1}, std::pair{2ULL, 2}, std::pair{2ULL, 3}, std::pair{3ULL, 2},
                                           std::pair{5ULL, 2}, std::pair{3ULL, 5}, std::pair{2ULL, 9}, std::pair{7ULL, 3},
                                           std::pair{2ULL, 16}, std::pair{1000003ULL, 1}, std::pair{1000003ULL, 2},
                                           std::pair{2305843009213693951ULL, 1}));

TEST(Elements, Distinct) {
    for (auto [p, e] : {std::pair{2ULL, 3}, {3ULL, 2}, {5ULL, 1}, {2ULL, 4}}) {
        const auto f = gf::field_create(p, e);
        std::set<std::vector<std::uint64_t>> seen;
        for (const auto& a : f.elements()) seen.insert(a.coeffs());
        EXPECT_EQ(seen.size(), f.q());
    }
}
