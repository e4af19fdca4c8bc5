#include <weyl_e8/binary_forms.hpp>
#include <weyl_e8/semiinvariants.hpp>

#include <gtest/gtest.h>

using namespace weyl_e8;

namespace {

const Covariant f = Covariant::quartic();
const Covariant g = Covariant::sextic();

Polynomial a(int i) { return var(kAlpha[i]); }
Polynomial b(int i) { return var(kBeta[i]); }

// u^w s(alpha_hat) at u = 1 by literal substitution, split by powers of v.
Covariant literal_lift(const Semiinvariant& s) {
    SubstitutionMap sigma;
    for (auto [vars, n] : {std::pair<const Var*, int>{kAlpha.data(), 4}, {kBeta.data(), 6}}) {
        for (int i = 0; i <= n; ++i) {
            Polynomial hat;
            for (int j = i; j <= n; ++j) hat += var(vars[j]) * Polynomial(Rational(binomial(j, i))) * var(Var::v).pow(j - i);
            sigma[vars[i]] = hat;
        }
    }
    const Polynomial expanded = s.poly.substitute(sigma);
    std::vector<Polynomial> coeffs;
    for (int k = 0; k <= s.order; ++k) coeffs.push_back(expanded.coefficient(Var::v, k).trimmed());
    if (!expanded.is_zero() && expanded.max_exponent(Var::v) > s.order) throw std::domain_error("degree too high");
    return Covariant(s.order, coeffs);
}

}  // namespace

TEST(Source, Examples) {
    EXPECT_EQ(source(f).poly, a(0));
    EXPECT_EQ(source(f).order, 4);
    EXPECT_EQ(source(transvectant(f, g, 2)).poly,
              (2 * a(0) * b(2) - make_rational(5, 2) * a(1) * b(1) + 5 * a(2) * b(0)) / Rational(30));
    EXPECT_EQ(source(g * g).poly, b(0).pow(2));
    EXPECT_THROW(source(Covariant::zero()), std::domain_error);
}

TEST(Source, Multiplicative) {
    std::vector<Covariant> pool{f, g, transvectant(f, g, 1), transvectant(f, f, 2), transvectant(g, g, 4),
                                transvectant(f, g, 3)};
    for (const auto& c1 : pool) {
        for (const auto& c2 : pool) EXPECT_EQ(source(c1 * c2).poly, source(c1).poly * source(c2).poly);
    }
}

TEST(RobertsLift, Examples) {
    EXPECT_EQ(roberts_lift({a(0), 4}), f);
    const Covariant fg1 = transvectant(f, g, 1);
    EXPECT_EQ(roberts_lift(source(fg1)), fg1);
    const Covariant inv = transvectant(f, f, 4);
    EXPECT_EQ(roberts_lift(source(inv)), inv);
    EXPECT_EQ(roberts_lift(source(inv)).order(), 0);
    EXPECT_THROW(roberts_lift({a(0) * b(0), 9}), std::domain_error);
    EXPECT_THROW(roberts_lift({a(0), 3}), std::domain_error);
}

TEST(RobertsLift, MatchesLiteralSubstitution) {
    for (const auto& c : {f, g, transvectant(f, g, 1), transvectant(g, g, 2), transvectant(f, g * g, 3)}) {
        const Semiinvariant s = source(c);
        EXPECT_EQ(roberts_lift(s), literal_lift(s));
        EXPECT_EQ(roberts_lift(s), c);
    }
}

TEST(InferOrder, Examples) {
    EXPECT_EQ(infer_order(a(0)), 4);
    EXPECT_EQ(infer_order(source(transvectant(f, g, 1)).poly), 8);
    EXPECT_FALSE(infer_order(a(0) + b(0)).has_value());
}

TEST(ShiftedCoefficients, HattedMaps) {
    const auto ab = hatted_ab();
    EXPECT_TRUE(ab[0][1].is_zero());
    EXPECT_EQ(ab[0][0], a(0));
    EXPECT_EQ(ab[1][0], b(0));
    EXPECT_EQ(ab[0][2], a(2) - make_rational(3, 8) * a(1).pow(2) * a(0).pow(-1));
    EXPECT_EQ(ab[1][1], b(1) - make_rational(3, 2) * a(1) * b(0) * a(0).pow(-1));
    const auto cd = hatted_cd();
    EXPECT_TRUE(cd[1][1].is_zero());
    EXPECT_EQ(cd[0][1], a(1) - make_rational(2, 3) * a(0) * b(1) * b(0).pow(-1));
    SubstitutionMap alpha1_zero{{Var::alpha1, Polynomial()}};
    EXPECT_EQ(cd[0][1].substitute(alpha1_zero), make_rational(-2, 3) * a(0) * b(1) * b(0).pow(-1));
}

TEST(ShiftedCoefficients, ScaledValuesAreSemiinvariants) {
    const std::vector<BinaryForm> forms{BinaryForm::quartic(), BinaryForm::sextic()};
    const int n[2] = {4, 6};
    for (std::size_t m = 0; m < 2; ++m) {
        const auto gamma = shifted_coefficients(forms, m);
        const Polynomial lead = forms[m].coefficients[0];
        for (std::size_t k = 0; k < 2; ++k) {
            for (int i = 0; i <= n[k]; ++i) {
                const int power = (k == m) ? std::max(i - 1, 0) : i;
                const Polynomial s = gamma[k][i] * lead.pow(power);
                if (s.is_zero()) continue;
                EXPECT_GE(s.min_exponent(lead.alphabet()[0]), 0);
                const auto inferred = infer_order(s);
                ASSERT_TRUE(inferred.has_value());
                EXPECT_EQ(*inferred, n[k] - 2 * i + n[m] * power);
                const auto report = check_semiinvariance({s, *inferred}, 5, 99);
                EXPECT_TRUE(all_pass(report)) << "k=" << k << " m=" << m << " i=" << i;
            }
        }
    }
}

TEST(CheckSemiinvariance, Examples) {
    EXPECT_TRUE(all_pass(check_semiinvariance({a(0), 4}, 5, 1)));
    const auto bad = check_semiinvariance({a(1), 2}, 3, 1);
    EXPECT_FALSE(all_pass(bad));
    EXPECT_EQ(bad[0].axiom, "unipotent");
    EXPECT_FALSE(bad[0].pass);
    EXPECT_TRUE(bad[1].pass);  // alpha1 has diagonal weight 2
    const auto j = to_json(bad[0]);
    EXPECT_TRUE(j.contains("witness"));
    EXPECT_FALSE(j["witness"].is_null());
    EXPECT_FALSE(all_pass(check_semiinvariance({a(0), 3}, 2, 1)));
}

TEST(CheckSemiinvariance, UnipotentSeriesMatchesLiteralSubstitution) {
    const Polynomial s = source(transvectant(f, g, 2)).poly + a(1) * b(3);
    const Rational kappa = make_rational(-3, 7);
    SubstitutionMap sigma;
    for (auto [vars, n] : {std::pair<const Var*, int>{kAlpha.data(), 4}, {kBeta.data(), 6}}) {
        for (int l = 0; l <= n; ++l) {
            Polynomial img;
            for (int i = 0; i <= l; ++i) img += var(vars[i]) * Polynomial(Rational(binomial(n - i, l - i)) * pow(kappa, l - i));
            sigma[vars[l]] = img;
        }
    }
    EXPECT_EQ(CoefficientDerivation::raising().exponential(s, kappa), s.substitute(sigma));
}
