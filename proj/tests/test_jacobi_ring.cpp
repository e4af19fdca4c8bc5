#include <weyl_e8/identities.hpp>
#include <weyl_e8/jacobi_ring.hpp>
#include <weyl_e8/semiinvariants.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace weyl_e8;

namespace {

Polynomial v(const char* name) { return var(name); }

// Random monomial over the given frame variables with degrees up to max_deg each.
Polynomial random_monomial(std::mt19937_64& rng, const std::vector<Var>& vars, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), pick(0, static_cast<int>(vars.size()) - 1);
    Polynomial m(1);
    const int factors = 1 + deg(rng);
    for (int i = 0; i < factors; ++i) m *= var(vars[pick(rng)]);
    return m;
}

const std::vector<Var> kAbVars{Var::a0, Var::a2, Var::a3, Var::a4, Var::b0, Var::b1, Var::b2,
                               Var::b3, Var::b4, Var::b5, Var::b6};
const std::vector<Var> kCdVars{Var::c0, Var::c1, Var::c2, Var::c3, Var::c4, Var::d0,
                               Var::d2, Var::d3, Var::d4, Var::d5, Var::d6};

}  // namespace

TEST(Translation, Examples) {
    EXPECT_EQ(ab_to_cd(v("a0")), v("c0"));
    EXPECT_EQ(ab_to_cd(v("a0") * v("b1")), Polynomial(make_rational(-3, 2)) * v("c1") * v("d0"));
    EXPECT_EQ(ab_to_cd(v("a2")), v("c2") - Polynomial(make_rational(3, 8)) * v("c1").pow(2) * v("c0").pow(-1));
    EXPECT_EQ(cd_to_ab(v("c0")), v("a0"));
    EXPECT_EQ(cd_to_ab(v("d0")), v("b0"));
    EXPECT_THROW(ab_to_cd(v("c0")), std::invalid_argument);
}

TEST(Translation, MatchesBinomialImages) {
    const auto to_cd = translation_images(Frame::ab);
    const auto to_ab = translation_images(Frame::cd);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = random_monomial(rng, kAbVars, 3) + 3 * random_monomial(rng, kAbVars, 3);
        const Polynomial q = random_monomial(rng, kCdVars, 3);
        EXPECT_EQ(ab_to_cd(p), p.substitute(to_cd)) << p;
        EXPECT_EQ(cd_to_ab(q), q.substitute(to_ab)) << q;
    }
}

TEST(Translation, MutuallyInverse) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = random_monomial(rng, kAbVars, 4);
        EXPECT_EQ(cd_to_ab(ab_to_cd(p)), p) << p;
        const Polynomial q = random_monomial(rng, kCdVars, 4);
        EXPECT_EQ(ab_to_cd(cd_to_ab(q)), q) << q;
    }
}

TEST(Translation, PreservesGrades) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = random_monomial(rng, kAbVars, 4);
        EXPECT_EQ(jacobi_grades(ab_to_cd(p)), jacobi_grades(p)) << p;
    }
}

TEST(JacobiGrades, Values) {
    EXPECT_EQ(jacobi_grades(v("a0") * v("b1")), (JacobiGrade{1, 1, 1, 4, 8}));
    EXPECT_EQ(jacobi_grades(v("b0") * v("b2")), (JacobiGrade{0, 2, 2, 0, 8}));
    EXPECT_EQ(jacobi_grades(v("c4")), (JacobiGrade{1, 0, 4, -20, -4}));
    EXPECT_THROW(jacobi_grades(v("a0") + v("b0")), std::invalid_argument);
    EXPECT_THROW(jacobi_grades(Polynomial()), std::domain_error);
}

TEST(JacobiGrades, OrderLaw) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const JacobiGrade g = jacobi_grades(random_monomial(rng, kAbVars, 5));
        EXPECT_EQ(g.weight, 4 * g.d_a + 6 * g.d_b - 6 * g.index);
        EXPECT_EQ(g.order, 4 * g.d_a + 6 * g.d_b - 2 * g.index);
    }
}

TEST(Membership, Examples) {
    EXPECT_TRUE(is_jacobi_form(v("a0") * v("b1")));
    EXPECT_FALSE(is_jacobi_form(v("a2")));
    EXPECT_TRUE(is_jacobi_form(v("b0")));
    EXPECT_TRUE(is_jacobi_form(v("c0") * v("d0")));
    EXPECT_FALSE(is_jacobi_form(v("c1")));
    EXPECT_THROW(is_jacobi_form(v("a0") + v("b0")), std::invalid_argument);
}

TEST(Membership, ImpliesNonNegativeOrder) {
    std::mt19937_64 rng(19);
    int members = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_monomial(rng, kAbVars, 3);
        if (!is_jacobi_form(p)) continue;
        ++members;
        EXPECT_GE(jacobi_grades(p).order, 0) << p;
    }
    EXPECT_GT(members, 0);
}

TEST(PsiJ, Examples) {
    EXPECT_EQ(psi_J(v("a0")).poly, v("alpha0"));
    EXPECT_EQ(psi_J(v("a0") * v("b1")).poly, v("alpha0") * v("beta1") - Polynomial(make_rational(3, 2)) * v("alpha1") * v("beta0"));
    EXPECT_EQ(psi_J(v("a0") * v("a2") / Rational(3)).poly,
              v("alpha0") * v("alpha2") / Rational(3) - v("alpha1").pow(2) / Rational(8));
    EXPECT_EQ(psi_J(v("a0") * v("b1")).order, 8);
    EXPECT_THROW(psi_J(v("a2")), std::domain_error);
}

TEST(PsiJ, InverseExamples) {
    EXPECT_EQ(psi_J_inverse({v("alpha0"), 4}).poly, v("a0"));
    const auto g = psi_J_inverse({(12 * v("beta0") * v("beta2") - 5 * v("beta1").pow(2)) / Rational(90), 8});
    EXPECT_EQ(g.poly, (12 * v("b0") * v("b2") - 5 * v("b1").pow(2)) / Rational(90));
    EXPECT_EQ(g.grade, (JacobiGrade{0, 2, 2, 0, 8}));
    const Polynomial s = (2 * v("alpha0") * v("beta2") - Polynomial(make_rational(5, 2)) * v("alpha1") * v("beta1") +
                          5 * v("alpha2") * v("beta0")) / Rational(30);
    EXPECT_EQ(psi_J_inverse({s, 6}).poly, (2 * v("a0") * v("b2") + 5 * v("a2") * v("b0")) / Rational(30));
}

TEST(PsiJ, RingHomomorphismAndInverse) {
    std::mt19937_64 rng(23);
    std::vector<Polynomial> members;
    while (members.size() < 12) {
        const Polynomial p = random_monomial(rng, kAbVars, 3);
        if (is_jacobi_form(p)) members.push_back(p);
    }
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        const Polynomial& p = members[i];
        const Polynomial& q = members[i + 1];
        EXPECT_EQ(psi_J(p * q).poly, psi_J(p).poly * psi_J(q).poly);
        EXPECT_EQ(psi_J(p + 2 * p).poly, 3 * psi_J(p).poly);
        EXPECT_EQ(psi_J_inverse(psi_J(p)).poly, p);
        EXPECT_TRUE(all_pass(check_semiinvariance(psi_J(p), 3, 29)));
    }
}

TEST(PsiJ, SourcesRoundTrip) {
    const Covariant f = Covariant::quartic(), g = Covariant::sextic();
    for (const Covariant& c : {transvectant(f, f, 2), transvectant(g, g, 2), transvectant(f, g, 1),
                               transvectant(f, g, 2), transvectant(g, g, 4)}) {
        const Semiinvariant s = source(c);
        const JacobiPolynomial j = psi_J_inverse(s);
        EXPECT_TRUE(is_jacobi_form(j.poly)) << j.poly;
        EXPECT_EQ(psi_J(j.poly).poly, s.poly);
        EXPECT_EQ(j.grade.order, s.order);
    }
}

TEST(DeltaFraction, Arithmetic) {
    const DeltaFraction d = DeltaFraction::delta_symbol();
    EXPECT_EQ(d, DeltaFraction(DeltaFraction::delta()));
    const DeltaFraction x(var(Var::A1), 2);
    EXPECT_EQ(x * d * d, DeltaFraction(var(Var::A1)));
    EXPECT_EQ((x + d) - d, x);
    EXPECT_EQ(DeltaFraction(var(Var::A1)) / d, DeltaFraction(var(Var::A1), 1));
    EXPECT_THROW(DeltaFraction(var(Var::A1)) / DeltaFraction(var(Var::A1) + var(Var::A2)), std::domain_error);
}

TEST(Expression, ParsesAndEvaluates) {
    const ExprPtr e = ExpressionParser::parse("-(3/4)*x^2 + y/(2*x) - 2^-1");
    ValueAlgebra<Rational> alg;
    alg.bindings = {{"x", Rational(2)}, {"y", Rational(8)}};
    EXPECT_EQ(e->evaluate(alg), Rational(-3) + Rational(2) - make_rational(1, 2));
    EXPECT_THROW(ExpressionParser::parse("x + * y"), std::invalid_argument);
    EXPECT_THROW(ExpressionParser::parse("(x"), std::invalid_argument);
    const Definitions defs = parse_definitions("a=1\nb = a+1\n");
    ASSERT_EQ(defs.size(), 2u);
    EXPECT_EQ(defs[1].first, "b");
    EXPECT_THROW(find_definition(defs, "c"), std::out_of_range);
}

TEST(Identities, HandCheckA1) {
    // -3 a0 b1 with a0 = E4/12, b1 = -4 A1/E4.
    const auto values = frame_in_modular_forms(Frame::ab);
    EXPECT_EQ(DeltaFraction(Polynomial(-3)) * values.at("a0") * values.at("b1"), DeltaFraction(var(Var::A1)));
}

TEST(Identities, AllPass) {
    for (const std::string& id : identity_ids()) {
        const IdentityReport r = verify_identity(id, 7);
        EXPECT_TRUE(r.pass) << id << ": " << to_json(r).dump();
        EXPECT_FALSE(r.anchor.empty());
    }
    EXPECT_THROW(verify_identity("nope"), std::invalid_argument);
}

TEST(Identities, GeneratorsAreMembers) {
    const Covariant f = Covariant::quartic(), g = Covariant::sextic();
    const Polynomial p = psi_J_inverse(source(transvectant(transvectant(f, g, 1), g, 3))).poly;
    EXPECT_TRUE(is_jacobi_form(p));
    EXPECT_TRUE(is_jacobi_form(ab_to_cd(p)));
}
