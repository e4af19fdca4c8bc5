#include <weyl_e8/basis_algorithm.hpp>
#include <weyl_e8/generator_catalog.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace weyl_e8;

namespace {

Polynomial v(const char* name) { return var(name); }

// Ansatz oracle: every monomial of total degree up to max_deg, filtered by grade.
std::set<std::string> brute_force_monomials(int k, int m, int max_deg) {
    const std::vector<Var> vars{Var::a0, Var::a2, Var::a3, Var::a4, Var::b0, Var::b1,
                                Var::b2, Var::b3, Var::b4, Var::b5, Var::b6};
    std::set<std::string> out;
    std::vector<Polynomial> layer{Polynomial(1)};
    std::set<std::string> seen;
    for (int d = 0; d <= max_deg; ++d) {
        std::vector<Polynomial> next;
        for (const auto& p : layer) {
            const JacobiGrade g = jacobi_grades(p);
            if (g.weight == k && g.index == m) out.insert(p.to_string());
            for (Var x : vars) {
                Polynomial q = p * var(x);
                if (seen.insert(q.to_string()).second) next.push_back(std::move(q));
            }
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace

TEST(Ansatz, Examples) {
    const auto a = enumerate_monomials(4, 1);
    ASSERT_EQ(a.monomials.size(), 1u);
    EXPECT_EQ(a.monomials[0], v("a0") * v("b1"));
    ASSERT_EQ(enumerate_monomials(0, 0).monomials.size(), 1u);
    EXPECT_EQ(enumerate_monomials(0, 0).monomials[0], Polynomial(1));
    ASSERT_EQ(enumerate_monomials(4, 0).monomials.size(), 1u);
    EXPECT_EQ(enumerate_monomials(4, 0).monomials[0], v("a0"));
    EXPECT_TRUE(enumerate_monomials(-2, 1).monomials.empty());
    EXPECT_THROW(enumerate_monomials(0, -1), std::invalid_argument);
}

TEST(Ansatz, MatchesBruteForce) {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{-8, 2}, {0, 2}, {-12, 4}, {-16, 4}, {-10, 3}, {6, 3}}) {
        std::set<std::string> got;
        for (const auto& p : enumerate_monomials(k, m).monomials) got.insert(p.to_string());
        EXPECT_EQ(got, brute_force_monomials(k, m, 6)) << k << "," << m;
    }
}

TEST(Basis, Examples) {
    const BasisResult r = jacobi_basis(4, 1);
    ASSERT_EQ(r.dimension(), 1u);
    EXPECT_EQ(r.basis[0].poly, v("a0") * v("b1"));
    EXPECT_EQ(jacobi_basis(-2, 1).dimension(), 0u);
    EXPECT_EQ(jacobi_basis(-8, 2).dimension(), 0u);
    // The index 4 invariant <f,f>^4 = a0 a4 / 35 + a2^2 / 12 up to normalization.
    EXPECT_EQ(jacobi_basis(-16, 4).dimension(), 1u);
}

TEST(Basis, ElementsAreMembersWithExactGrades) {
    for (int m = 0; m <= 5; ++m) {
        for (int w = 0; w <= 8; w += 2) {
            const BasisResult r = jacobi_basis(w - 4 * m, m);
            for (const auto& b : r.basis) {
                EXPECT_TRUE(is_jacobi_form(b.poly)) << b.poly;
                EXPECT_EQ(b.grade.weight, w - 4 * m);
                EXPECT_EQ(b.grade.index, m);
            }
            std::vector<Polynomial> polys;
            for (const auto& b : r.basis) polys.push_back(b.poly);
            if (!polys.empty()) EXPECT_EQ(detail::polynomial_rank(polys), polys.size());
        }
    }
}

TEST(Basis, NegativeOrderIsEmpty) {
    for (int m = 0; m <= 8; ++m) {
        for (int w = -12; w < 0; w += 2) EXPECT_EQ(jacobi_basis(w - 4 * m, m).dimension(), 0u) << m << "," << w;
    }
}

TEST(Basis, NullspaceVectorsArePrimitive) {
    const BasisResult r = jacobi_basis(-40, 10);
    for (const auto& b : r.basis) {
        Rational scale;
        const Polynomial p = b.poly.primitive(&scale);
        EXPECT_EQ(p, b.poly);
    }
}

TEST(LbCounts, MatchesExpectedRow) {
    const LbTable t = lb_generator_counts(10);
    const std::vector<long> expected{0, 0, 0, 0, 1, 0, 2, 0, 1, 1, 2};
    EXPECT_EQ(t.generators, expected);
}

TEST(LbCounts, MatchesOrderZeroGenerators) {
    const LbTable t = lb_generator_counts(12);
    const CatalogTable table = catalog_table();
    for (int m = 1; m <= 12; ++m) EXPECT_EQ(t.generators[m], table.count(m, 0)) << m;
}

TEST(CrossRing, GeneratorProductsSpanSmallCells) {
    for (const CrossRingCell& c : cross_ring_check(5, 8)) {
        EXPECT_TRUE(c.pass()) << c.index << "," << c.order << ": rank " << c.rank << " dim " << c.dimension;
    }
}
