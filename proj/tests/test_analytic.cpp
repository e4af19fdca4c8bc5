#include <weyl_e8/analytic_eval.hpp>

#include <gtest/gtest.h>

using namespace weyl_e8;

namespace {

Complex series(const std::vector<Rational>& coeffs, Complex tau) {
    const Complex q = nome(tau);
    Complex s = 0, qk = 1;
    for (const auto& c : coeffs) {
        s += c.get_d() * qk;
        qk *= q;
    }
    return s;
}

}  // namespace

TEST(Eisenstein, ExactCoefficients) {
    const auto e4 = eisenstein_coefficients(2, 3);
    EXPECT_EQ(e4, (std::vector<Rational>{1, 240, 2160, 6720}));
    const auto e6 = eisenstein_coefficients(3, 2);
    EXPECT_EQ(e6, (std::vector<Rational>{1, -504, -16632}));
    EXPECT_THROW(eisenstein_coefficients(0, 2), std::invalid_argument);
}

TEST(Eisenstein, LambertMatchesCoefficientSeries) {
    const Complex tau(0.1, 1.1);
    for (int n : {2, 3, 4}) {
        EXPECT_LT(std::abs(eisenstein(n, tau, 30) - series(eisenstein_coefficients(n, 30), tau)), 1e-12) << n;
    }
}

TEST(Lattice, ShellSizesMatchTheta) {
    // Shell counts of E8 are the q-coefficients of E4.
    const auto& vs = E8Lattice::vectors(6);
    std::map<int, int> shells;
    for (const auto& w : vs) ++shells[E8Lattice::norm4(w) / 8];
    EXPECT_EQ(shells[0], 1);
    EXPECT_EQ(shells[1], 240);
    EXPECT_EQ(shells[2], 2160);
    EXPECT_EQ(shells[3], 6720);
    EXPECT_EQ(E8Lattice::roots().size(), 240u);
    for (const auto& w : vs) EXPECT_EQ(E8Lattice::norm4(w) % 8, 0);
}

TEST(Theta, ProductFormulaMatchesLatticeSum) {
    const NumericContext ctx = default_context();
    Vec8 z = ctx.z;
    z[5] = Complex(0.02, -0.01);
    EXPECT_LT(std::abs(theta_e8(ctx.tau, z) - theta_e8_lattice(ctx.tau, z, 8)), 1e-9);
    const Complex tau(0.3, 0.9);
    EXPECT_LT(std::abs(theta_e8(tau, Vec8{}) - eisenstein(2, tau, 40)), 1e-10);
}

TEST(Theta, ConventionsAtZero) {
    const Complex tau(0, 1.2);
    EXPECT_LT(std::abs(jacobi_theta(1, 0.0, tau)), 1e-15);
    const Complex q = nome(tau);
    // theta_3 = 1 + 2 q^(1/2) + ...
    EXPECT_LT(std::abs(theta_null(3, tau) - (1.0 + 2.0 * std::sqrt(q) + 2.0 * std::pow(q, 2))), 1e-10);
    EXPECT_THROW(jacobi_theta(5, 0.0, tau), std::invalid_argument);
    EXPECT_THROW(jacobi_theta(3, 0.0, Complex(0, -1)), std::domain_error);
}

TEST(Forms, ReduceToEisensteinAtZero) {
    const Complex tau(0.05, 1.05);
    const Complex e4 = eisenstein(2, tau, 40), e6 = eisenstein(3, tau, 40);
    for (int m = 1; m <= 5; ++m) EXPECT_LT(std::abs(form_A(m, tau, Vec8{}) - e4), 1e-9) << m;
    for (int m : {2, 3, 4, 6}) EXPECT_LT(std::abs(form_B(m, tau, Vec8{}) - e6), 1e-9) << m;
    EXPECT_THROW(form_A(6, tau, Vec8{}), std::invalid_argument);
    EXPECT_THROW(form_B(5, tau, Vec8{}), std::invalid_argument);
}

TEST(Forms, FrameValues) {
    const NumericContext ctx = default_context();
    const auto v = evaluate_forms(ctx);
    EXPECT_LT(std::abs(v.at("a0") - v.at("E4") / 12.0), 1e-15);
    EXPECT_LT(std::abs(v.at("b0") - v.at("E6") / 216.0), 1e-15);
    EXPECT_EQ(v.at("a1"), Complex(0));
    EXPECT_EQ(v.at("d1"), Complex(0));
    EXPECT_LT(std::abs(v.at("A1") + 3.0 * v.at("a0") * v.at("b1")), 1e-12);
    EXPECT_EQ(eval_form("A3", ctx), v.at("A3"));
    EXPECT_THROW(eval_form("Z9", ctx), std::invalid_argument);
}

TEST(Context, Validation) {
    NumericContext ctx = default_context();
    ctx.tau = Complex(0.5, 0);
    EXPECT_THROW(evaluate_forms(ctx), std::domain_error);
    ctx = default_context();
    ctx.order = 0;
    EXPECT_THROW(numeric_suite(ctx), std::domain_error);
    EXPECT_THROW(numeric_check("nope", default_context()), std::invalid_argument);
    EXPECT_THROW(special_function("E3", 0.0, default_context()), std::invalid_argument);
    EXPECT_LT(std::abs(special_function("E4", 0.0, default_context()) - eisenstein(2, Complex(0, 1.2), 24)), 1e-15);
}

TEST(NumericSuite, AllChecksPassAtDefaultPoint) {
    const auto checks = numeric_suite(default_context(), 3);
    ASSERT_EQ(checks.size(), numeric_check_ids().size());
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << to_json(c).dump();
}

TEST(NumericSuite, AnotherPoint) {
    NumericContext ctx;
    ctx.tau = Complex(0.2, 1.0);
    ctx.z = {Complex(0.05, 0.01), Complex(-0.03), Complex(0, 0.02), 0.01, 0, 0, 0, 0};
    ctx.order = 40;
    for (const auto& c : numeric_suite(ctx, 9)) EXPECT_TRUE(c.pass) << to_json(c).dump();
}
