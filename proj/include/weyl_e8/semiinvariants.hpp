/*
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <weyl_e8/binary_forms.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace weyl_e8 {

/// Polynomial in the coefficients together with its declared order.
struct Semiinvariant {
    Polynomial poly;
    int order = 0;
};

/// Leading coefficient: Psi(alpha; 1, 0).
inline Semiinvariant source(const Covariant& c) {
    if (c.is_zero()) throw std::domain_error("source of the zero covariant");
    return {c.coefficient(0), c.order()};
}

/// Diagonal weight of every term, when uniform.
inline std::optional<int> infer_order(const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    const auto w = p.weighted_degree([](Var v) { return long(diagonal_weight(v)); });
    if (!w) return std::nullopt;
    return static_cast<int>(*w);
}

/// Psi = u^w s(alpha_hat(u, v)), alpha_hat_i = sum_j C(j, i) alpha_j (v/u)^(j-i).
///
/// The substitution equals exp((v/u) D) for the lowering derivation D, so
/// coefficient k of the covariant is D^k s / k!.
inline Covariant roberts_lift(const Semiinvariant& s) {
    if (s.order < 0) throw std::invalid_argument("negative order");
    std::vector<Polynomial> coeffs;
    Polynomial cur = s.poly;
    Rational inv_fact = 1;
    for (int k = 0; k <= s.order; ++k) {
        if (k > 0) {
            cur = CoefficientDerivation::lowering()(cur);
            inv_fact /= k;
        }
        coeffs.push_back(Polynomial(cur).scale(inv_fact));
    }
    if (!CoefficientDerivation::lowering()(cur).is_zero()) {
        throw std::domain_error("not a semiinvariant of order " + std::to_string(s.order));
    }
    for (auto& c : coeffs) c = c.is_zero() ? Polynomial() : c.trimmed();
    return Covariant(s.order, std::move(coeffs));
}

/// A binary form given by its degree and coefficient polynomials.
struct BinaryForm {
    int degree;
    std::vector<Polynomial> coefficients;

    static BinaryForm quartic() {
        return {4, {var(Var::alpha0), var(Var::alpha1), var(Var::alpha2), var(Var::alpha3), var(Var::alpha4)}};
    }
    static BinaryForm sextic() {
        return {6, {var(Var::beta0), var(Var::beta1), var(Var::beta2), var(Var::beta3), var(Var::beta4),
                    var(Var::beta5), var(Var::beta6)}};
    }
};

/// gamma_(k,i)^(m) = sum_(j<=i) alpha_(k,j) C(n_k - j, n_k - i) t^(i-j),
/// t = -alpha_(m,1) / (n_m alpha_(m,0)). Returns one coefficient list per form.
inline std::vector<std::vector<Polynomial>> shifted_coefficients(const std::vector<BinaryForm>& forms, std::size_t m) {
    const BinaryForm& centre = forms.at(m);
    const Polynomial& lead = centre.coefficients.at(0);
    if (lead.size() != 1) throw std::invalid_argument("leading coefficient must be a single term");
    const Polynomial t = -centre.coefficients.at(1) * lead.inverse_monomial() / Rational(centre.degree);
    std::vector<Polynomial> tpow{Polynomial(1)};
    int maxdeg = 0;
    for (const auto& f : forms) maxdeg = std::max(maxdeg, f.degree);
    for (int e = 1; e <= maxdeg; ++e) tpow.push_back(tpow.back() * t);
    std::vector<std::vector<Polynomial>> out;
    for (const auto& f : forms) {
        std::vector<Polynomial> gamma;
        for (int i = 0; i <= f.degree; ++i) {
            Polynomial g;
            for (int j = 0; j <= i; ++j) {
                g += f.coefficients[j] * tpow[i - j] * Polynomial(Rational(binomial(f.degree - j, f.degree - i)));
            }
            gamma.push_back(g);
        }
        out.push_back(std::move(gamma));
    }
    return out;
}

/// (a_hat_0..4, b_hat_0..6), centred on the quartic.
inline std::vector<std::vector<Polynomial>> hatted_ab() {
    return shifted_coefficients({BinaryForm::quartic(), BinaryForm::sextic()}, 0);
}

/// (c_hat_0..4, d_hat_0..6), centred on the sextic.
inline std::vector<std::vector<Polynomial>> hatted_cd() {
    return shifted_coefficients({BinaryForm::quartic(), BinaryForm::sextic()}, 1);
}

struct AxiomResult {
    std::string axiom;
    int trial;
    bool pass;
    nlohmann::json witness;
};

inline nlohmann::json to_json(const AxiomResult& r) {
    nlohmann::json j{{"axiom", r.axiom}, {"trial", r.trial}, {"pass", r.pass}};
    j["witness"] = r.pass ? nlohmann::json(nullptr) : r.witness;
    return j;
}

/// Rationals with numerator and denominator drawn from [-9, 9].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational any() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        return make_rational(num(rng_), den(rng_) * (sign(rng_) ? 1 : -1));
    }
    Rational nonzero() {
        Rational r;
        do r = any(); while (r == 0);
        return r;
    }
    /// Random unimodular matrix as a product of unipotent and diagonal factors.
    Matrix2 unimodular() {
        const Rational k1 = any(), k2 = any(), lam = nonzero();
        const Matrix2 U{{{1, k1}, {0, 1}}}, L{{{1, 0}, {k2, 1}}}, D{{{lam, 0}, {0, Rational(1) / lam}}};
        Matrix2 T = multiply(multiply(L, D), U);
        if (std::bernoulli_distribution(0.25)(rng_)) {
            // Occasionally use a matrix with zero top-left entry.
            const Matrix2 S{{{0, -1}, {1, 0}}};
            T = multiply(S, T);
        }
        return T;
    }
    std::mt19937_64& engine() { return rng_; }

    static Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
        Matrix2 r;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
        return r;
    }

private:
    std::mt19937_64 rng_;
    std::bernoulli_distribution sign{0.5};
};

/// Unipotent and diagonal axioms at random rational kappa, lambda.
inline std::vector<AxiomResult> check_semiinvariance(const Semiinvariant& s, int trials, std::uint64_t seed) {
    RationalSampler sampler(seed);
    std::vector<AxiomResult> out;
    for (int trial = 0; trial < trials; ++trial) {
        const Rational kappa = sampler.nonzero();
        const Polynomial moved = CoefficientDerivation::raising().exponential(s.poly, kappa);
        const bool unipotent_ok = moved == s.poly;
        nlohmann::json w;
        if (!unipotent_ok) w = {{"kappa", to_string(kappa)}, {"transformed", moved.to_json()}};
        out.push_back({"unipotent", trial, unipotent_ok, w});

        Rational lambda = sampler.nonzero();
        if (lambda == 1 || lambda == -1) lambda = lambda * 2;
        const Polynomial scaled = diagonal_action(s.poly, lambda);
        const bool diagonal_ok = scaled == Polynomial(s.poly).scale(pow(lambda, s.order));
        nlohmann::json wd;
        if (!diagonal_ok) wd = {{"lambda", to_string(lambda)}, {"order", s.order}, {"transformed", scaled.to_json()}};
        out.push_back({"diagonal", trial, diagonal_ok, wd});
    }
    return out;
}

inline bool all_pass(const std::vector<AxiomResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

}  // namespace weyl_e8
