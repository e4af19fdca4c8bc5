#include <weyl_e8/generator_catalog.hpp>
#include <weyl_e8/semiinvariants.hpp>

#include <gtest/gtest.h>

using namespace weyl_e8;

namespace {

// Expected generator counts by index and order.
constexpr const char* kExpectedTable = R"(m\omega,0,2,4,6,8,10,12,#
0,-,-,1,1,-,-,-,2
1,-,-,-,-,1,-,-,1
2,-,-,1,1,1,-,-,3
3,-,-,1,1,1,1,1,5
4,1,1,1,1,1,-,-,5
5,-,-,2,2,1,-,-,5
6,2,2,2,1,-,-,-,7
7,-,1,2,3,2,1,-,9
8,1,3,3,1,-,-,-,8
9,1,2,4,1,-,-,-,8
10,2,3,3,-,-,-,-,8
11,-,4,5,3,1,-,-,13
12,3,4,2,-,-,-,-,9
13,1,5,3,-,-,-,-,9
14,3,5,1,-,-,-,-,9
15,3,7,3,2,-,-,-,15
16,3,4,-,-,-,-,-,7
17,3,6,1,-,-,-,-,10
18,4,3,-,-,-,-,-,7
19,3,4,1,-,-,-,-,8
20,3,1,-,-,-,-,-,4
21,4,4,1,-,-,-,-,9
22,2,1,-,-,-,-,-,3
23,3,2,-,-,-,-,-,5
24,2,-,-,-,-,-,-,2
25,3,2,1,-,-,-,-,6
26,1,-,-,-,-,-,-,1
27,1,1,-,-,-,-,-,2
28,1,-,-,-,-,-,-,1
29,2,1,-,-,-,-,-,3
30,1,-,-,-,-,-,-,1
31,1,1,-,-,-,-,-,2
32,1,-,-,-,-,-,-,1
33,1,-,-,-,-,-,-,1
34,-,-,-,-,-,-,-,0
35,1,1,-,-,-,-,-,2
36,-,-,-,-,-,-,-,0
37,1,-,-,-,-,-,-,1
38,-,-,-,-,-,-,-,0
39,-,-,-,-,-,-,-,0
40,-,-,-,-,-,-,-,0
41,1,-,-,-,-,-,-,1
42,-,-,-,-,-,-,-,0
43,-,-,-,-,-,-,-,0
44,-,-,-,-,-,-,-,0
45,1,-,-,-,-,-,-,1
Tot.,60,68,38,17,8,2,1,194
)";

GeneratorLabel L(int da, int db, int m, int w, int n = 0) { return {da, db, m, w, n}; }
Polynomial v(const char* name) { return var(name); }

}  // namespace

TEST(Recipes, ChecksumAndSize) {
    EXPECT_TRUE(recipes_checksum_ok());
    EXPECT_EQ(Catalog::instance().recipes().size(), 194u);
}

TEST(Recipes, LabelsRoundTrip) {
    for (const auto& r : Catalog::instance().recipes()) {
        EXPECT_EQ(GeneratorLabel::parse(r.label.str()), r.label);
        EXPECT_TRUE(r.label.grade_consistent()) << r.label.str();
        const std::string printed = r.tree->str();
        EXPECT_EQ(detail::RecipeParser(printed).parse_expression_to_end()->str(), printed) << r.label.str();
    }
    EXPECT_THROW(GeneratorLabel::parse("G(1,2)"), std::invalid_argument);
    EXPECT_THROW(GeneratorLabel::parse("H(1,0,0,4)"), std::invalid_argument);
}

TEST(Recipes, ValidationErrors) {
    EXPECT_THROW(parse_recipes("G(1,0,0,6) = f"), std::invalid_argument);
    EXPECT_THROW(parse_recipes("G(1,0,0,4) = f\nG(1,0,0,4) = f"), std::invalid_argument);
    EXPECT_THROW(parse_recipes("G(2,0,2,4) = T(G(1,0,0,4), f, 2)"), std::invalid_argument);
    EXPECT_THROW(parse_recipes("G(1,0,0,4) = T(f, f"), std::invalid_argument);
}

TEST(Catalog, BuildErrors) {
    // Grade-consistent label whose recipe has a different grade.
    Catalog wrong("G(0,1,0,6) = T(f, f, 1)");
    EXPECT_THROW(wrong.build(L(0, 1, 0, 6)), std::runtime_error);
    Catalog zero("G(2,0,2,4) = T(f, f, 1)");
    EXPECT_THROW(zero.build(L(2, 0, 2, 4)), std::runtime_error);
    EXPECT_THROW(Catalog::instance().build(L(9, 9, 9, 60)), std::out_of_range);
}

TEST(Catalog, Examples) {
    const Covariant f = Covariant::quartic(), g = Covariant::sextic();
    EXPECT_EQ(build_generator(L(1, 0, 0, 4)), f);
    const Covariant inv = build_generator(L(2, 0, 4, 0));
    EXPECT_EQ(inv, transvectant(f, f, 4));
    EXPECT_EQ(inv.order(), 0);
    const Covariant big = build_generator(L(0, 15, 45, 0));
    EXPECT_EQ(big, transvectant(build_generator(L(0, 3, 5, 8)), build_generator(L(0, 3, 8, 2)).pow(4), 8));
    EXPECT_EQ(covariant_grades(big), (CovariantGrade{0, 15, 0}));
}

TEST(Catalog, TableMatchesExpectedCounts) {
    const CatalogTable t = catalog_table();
    EXPECT_EQ(t.to_csv(), kExpectedTable);
    EXPECT_EQ(t.total(), 194);
    const std::vector<int> totals{60, 68, 38, 17, 8, 2, 1};
    for (std::size_t i = 0; i < totals.size(); ++i) EXPECT_EQ(t.column_total(2 * static_cast<int>(i)), totals[i]);
    EXPECT_EQ(t.row_total(3), 5);
    EXPECT_EQ(t.count(45, 0), 1);
}

TEST(Catalog, GradesAndInvariants) {
    Catalog& c = Catalog::instance();
    c.build_all();
    for (const auto& r : c.recipes()) {
        const Covariant& cov = *c.build(r.label);
        const CovariantGrade g = covariant_grades(cov);
        EXPECT_EQ(g, (CovariantGrade{r.label.d_a, r.label.d_b, r.label.order})) << r.label.str();
        EXPECT_EQ(r.label.weight(), r.label.order - 4 * r.label.index);
        if (r.label.order == 0) EXPECT_EQ(cov.coefficients().size(), 1u) << r.label.str();
    }
}

TEST(Catalog, ConcurrentBuildIsIdempotent) {
    Catalog fresh;
    fresh.build_all(4);
    EXPECT_EQ(fresh.cached(), 194u);
    for (const auto& r : fresh.recipes()) EXPECT_EQ(*fresh.build(r.label), *Catalog::instance().build(r.label));
}

TEST(GeneratorAsJacobi, Normalizations) {
    EXPECT_EQ(generator_as_jacobi(L(1, 0, 0, 4)).poly, v("a0"));
    EXPECT_EQ(generator_as_jacobi(L(0, 1, 0, 6)).poly, v("b0"));
    EXPECT_EQ(generator_as_jacobi(L(2, 0, 2, 4)).poly, v("a0") * v("a2") / Rational(3));
    EXPECT_EQ(generator_as_jacobi(L(1, 1, 2, 6)).poly, (2 * v("a0") * v("b2") + 5 * v("a2") * v("b0")) / Rational(30));
    EXPECT_EQ(generator_as_jacobi(L(0, 2, 2, 8)).poly, (12 * v("b0") * v("b2") - 5 * v("b1").pow(2)) / Rational(90));
    // Odd transvectant: proportional to a0 b1 with scalar of magnitude 1/6.
    const Polynomial odd = generator_as_jacobi(L(1, 1, 1, 8)).poly;
    EXPECT_EQ(odd, v("a0") * v("b1") / Rational(6));
}

TEST(GeneratorAsJacobi, AllGeneratorsAreMembers) {
    for (const auto& r : Catalog::instance().recipes()) {
        const JacobiPolynomial j = generator_as_jacobi(r.label);
        EXPECT_EQ(j.grade.d_a, r.label.d_a);
        EXPECT_EQ(j.grade.d_b, r.label.d_b);
        EXPECT_EQ(j.grade.order, r.label.order);
        EXPECT_EQ(j.grade.weight, r.label.weight());
        EXPECT_EQ(psi_J(j.poly).poly, source(*Catalog::instance().build(r.label)).poly) << r.label.str();
    }
}
