#include <weyl_e8/exact_matrix.hpp>
#include <weyl_e8/polynomial.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace weyl_e8;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return make_rational(num(rng), den(rng));
}

Polynomial random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int terms, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        Polynomial m = random_rational(rng);
        for (Var v : vars) m *= var(v).pow(deg(rng));
        p += m;
    }
    return p;
}

// Translation images with t = -c1/(4 c0), d1 = 0, written out by hand.
SubstitutionMap translation_images() {
    const Polynomial t = -var(Var::c1) * var(Var::c0).pow(-1) / Rational(4);
    SubstitutionMap s;
    s[Var::a0] = var(Var::c0);
    s[Var::a2] = var(Var::c2) + 3 * var(Var::c1) * t + 6 * var(Var::c0) * t.pow(2);
    s[Var::b0] = var(Var::d0);
    s[Var::b1] = 6 * var(Var::d0) * t;
    return s;
}

Rational laplace_det(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Rational d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> r;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) r.push_back(m[i][k]);
            }
            minor.push_back(r);
        }
        d += (j % 2 ? -1 : 1) * m[0][j] * laplace_det(minor);
    }
    return d;
}

// Largest k such that some k x k minor is nonzero.
std::size_t minors_rank(const std::vector<std::vector<Rational>>& m) {
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    for (std::size_t k = std::min(rows, cols); k > 0; --k) {
        std::vector<bool> rsel(rows, false), csel(cols, false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + k, true);
            do {
                std::vector<std::vector<Rational>> sub;
                for (std::size_t i = 0; i < rows; ++i) {
                    if (!rsel[i]) continue;
                    std::vector<Rational> r;
                    for (std::size_t j = 0; j < cols; ++j) {
                        if (csel[j]) r.push_back(m[i][j]);
                    }
                    sub.push_back(r);
                }
                if (laplace_det(sub) != 0) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational r = make_rational(6, -4);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(to_string(make_rational(0, 5)), "0");
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
    EXPECT_THROW(make_rational(1, 0), std::domain_error);
    EXPECT_THROW(parse_rational("x/2"), std::invalid_argument);
}

TEST(Rational, Bernoulli) {
    EXPECT_EQ(bernoulli(1), make_rational(-1, 2));
    EXPECT_EQ(bernoulli(2), make_rational(1, 6));
    EXPECT_EQ(bernoulli(4), make_rational(-1, 30));
    EXPECT_EQ(bernoulli(6), make_rational(1, 42));
    EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
    EXPECT_EQ(bernoulli(7), 0);
}

TEST(Polynomial, ArithmeticAndOrder) {
    Polynomial p = var("a0") * var("b2") * 2 + var("a2") * var("b0") * 5;
    EXPECT_EQ(p.to_string(), "2*a0*b2 + 5*a2*b0");
    EXPECT_EQ((p - p).size(), 0u);
    Polynomial q = var("x").pow(2) + 1;
    EXPECT_EQ(q.to_string(), "x^2 + 1");
    EXPECT_EQ((var("x") + 1) * (var("x") - 1), var("x").pow(2) - 1);
    EXPECT_EQ(var("x").pow(-2) * var("x").pow(3), var("x"));
}

TEST(Polynomial, LaurentOnlyOnDesignatedVariables) {
    EXPECT_NO_THROW(var(Var::c0).pow(-1));
    EXPECT_THROW(var(Var::c1).pow(-1), std::domain_error);
    EXPECT_THROW((var(Var::c0) + 1).pow(-1), std::domain_error);
}

TEST(Polynomial, ExponentOverflowIsDetected) {
    Polynomial p = Polynomial::variable(Var::x, 30000);
    EXPECT_THROW(p * p, std::overflow_error);
}

TEST(Polynomial, SubstituteTranslationExamples) {
    const auto s = translation_images();
    EXPECT_EQ(var(Var::a0).substitute(s), var(Var::c0));
    EXPECT_EQ((var(Var::a0) * var(Var::b1)).substitute(s), make_rational(-3, 2) * var(Var::c1) * var(Var::d0));
    const Polynomial a2 = var(Var::a2).substitute(s);
    EXPECT_EQ(a2, var(Var::c2) - make_rational(3, 8) * var(Var::c1).pow(2) * var(Var::c0).pow(-1));
    EXPECT_EQ(a2.min_exponent(Var::c0), -1);
    EXPECT_EQ((var(Var::c1) * var(Var::d0)).min_exponent(Var::c0), 0);
    EXPECT_EQ((var(Var::c0).pow(3) - 27 * var(Var::d0).pow(2)).min_exponent(Var::c0), 0);
    EXPECT_THROW(Polynomial().min_exponent(Var::c0), std::domain_error);
}

TEST(Polynomial, SubstituteRejectsUnmappedVariable) {
    const auto s = translation_images();
    Polynomial p = var(Var::a0) * var(Var::A1);
    EXPECT_THROW(p.substitute(s, c_alphabet()), std::invalid_argument);
    EXPECT_NO_THROW(var(Var::a0).substitute(s, c_alphabet()));
}

TEST(Polynomial, SubstitutionIsARingHomomorphism) {
    std::mt19937_64 rng(7);
    const std::vector<Var> vars{Var::x, Var::y, Var::z};
    for (int trial = 0; trial < 20; ++trial) {
        SubstitutionMap s;
        s[Var::x] = random_poly(rng, {Var::y, Var::z}, 2, 2);
        s[Var::y] = random_poly(rng, {Var::x, Var::z}, 3, 1);
        s[Var::z] = Polynomial::variable(Var::x, -1) * random_rational(rng);
        Polynomial p = random_poly(rng, vars, 4, 3), q = random_poly(rng, vars, 3, 2);
        EXPECT_EQ((p + q).substitute(s), p.substitute(s) + q.substitute(s));
        EXPECT_EQ((p * q).substitute(s), p.substitute(s) * q.substitute(s));
    }
}

TEST(Polynomial, SubstitutionMatchesTermwiseExpansion) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        SubstitutionMap s;
        s[Var::x] = random_poly(rng, {Var::x, Var::y}, 2, 2);
        s[Var::y] = random_poly(rng, {Var::z}, 2, 2);
        Polynomial p = random_poly(rng, {Var::x, Var::y, Var::z}, 5, 3);
        Polynomial naive;
        for (const auto& t : p.terms()) {
            Polynomial m = t.coeff;
            m *= s[Var::x].pow(p.exponent(t, Var::x));
            m *= s[Var::y].pow(p.exponent(t, Var::y));
            m *= var(Var::z).pow(p.exponent(t, Var::z));
            naive += m;
        }
        EXPECT_EQ(p.substitute(s), naive);
    }
}

TEST(Polynomial, JsonRoundTripIsFixedPoint) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = random_poly(rng, {Var::a0, Var::b3, Var::E4}, 6, 3) * var(Var::E4).pow(-2);
        const auto j1 = p.to_json();
        const Polynomial back = Polynomial::from_json(j1);
        EXPECT_EQ(back, p);
        EXPECT_EQ(back.to_json().dump(), j1.dump());
    }
}

TEST(Polynomial, DerivativeAndEvaluation) {
    Polynomial p = var("x").pow(3) * var("y") - 2 * var("y").pow(2);
    EXPECT_EQ(p.derivative(Var::x), 3 * var("x").pow(2) * var("y"));
    EXPECT_EQ(p.derivative(Var::y), var("x").pow(3) - 4 * var("y"));
    const Rational value = p.evaluate_at<Rational>(std::map<Var, Rational>{{Var::x, 2}, {Var::y, make_rational(1, 2)}});
    EXPECT_EQ(value, Rational(4) - Rational(1, 2));
}

TEST(ExactMatrix, RankExamples) {
    EXPECT_EQ(exact_rank(ExactMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
    EXPECT_EQ(exact_rank(ExactMatrix({{1, 2}, {2, 4}})), 1u);
    EXPECT_EQ(exact_rank(ExactMatrix({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}})), 2u);
    EXPECT_EQ(exact_rank(ExactMatrix()), 0u);
}

TEST(ExactMatrix, RankMatchesMinorsOracle) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dim(1, 5), sparse(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = dim(rng), c = dim(rng);
        std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(c));
        for (auto& row : rows) {
            for (auto& x : row) x = sparse(rng) == 0 ? Rational(0) : random_rational(rng);
        }
        // Force dependencies in some trials.
        if (r >= 3 && trial % 2 == 0) {
            for (int j = 0; j < c; ++j) rows[2][j] = rows[0][j] * 3 - rows[1][j] / 2;
        }
        EXPECT_EQ(exact_rank(ExactMatrix(rows)), minors_rank(rows)) << "trial " << trial;
        if (r == c) EXPECT_EQ(determinant(ExactMatrix(rows)), laplace_det(rows));
    }
}

TEST(ExactMatrix, NullspaceIsPrimitiveAndAnnihilates) {
    ExactMatrix m({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
    auto ns = nullspace(m);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& x : ns) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
            EXPECT_EQ(s, 0);
        }
        auto first = std::find_if(x.begin(), x.end(), [](const Rational& q) { return q != 0; });
        EXPECT_GT(*first, 0);
        for (const auto& q : x) EXPECT_EQ(q.get_den(), 1);
    }
}
