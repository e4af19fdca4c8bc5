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

#include <weyl_e8/polynomial.hpp>

#include <array>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace weyl_e8 {

struct CovariantGrade {
    int d_alpha = 0;
    int d_beta = 0;
    int order = 0;
    friend bool operator==(const CovariantGrade&, const CovariantGrade&) = default;
};

/// Homogeneous polynomial in (u, v) whose coefficients are polynomials in the
/// quartic coefficients alpha0..alpha4 and sextic coefficients beta0..beta6.
///
/// coefficient(k) multiplies u^(order-k) v^k.
class Covariant {
public:
    Covariant() = default;
    Covariant(int order, std::vector<Polynomial> coefficients) : order_(order), coeffs_(std::move(coefficients)) {
        if (order < 0) throw std::invalid_argument("negative order");
        if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
            throw std::invalid_argument("coefficient count must be order + 1");
        }
    }

    static Covariant zero(int order = 0) { return Covariant(order, std::vector<Polynomial>(order + 1)); }

    /// f = sum alpha_i u^(4-i) v^i.
    static Covariant quartic() { return generic_form(kAlpha); }
    /// g = sum beta_i u^(6-i) v^i.
    static Covariant sextic() { return generic_form(kBeta); }

    /// Splits a polynomial in alpha, beta, u, v by powers of u and v.
    static Covariant from_polynomial(const Polynomial& p) {
        if (p.is_zero()) return zero();
        const auto deg = p.homogeneous_degree({Var::u, Var::v});
        if (!deg) throw std::invalid_argument("not a binary form");
        std::vector<Polynomial> coeffs(*deg + 1);
        for (const auto& t : p.terms()) {
            const int k = p.exponent(t, Var::v);
            Polynomial term = Polynomial::from_terms(p.alphabet(), {t});
            coeffs[k] += term.coefficient(Var::u, *deg - k).coefficient(Var::v, k);
        }
        for (auto& c : coeffs) c = c.is_zero() ? Polynomial() : c.trimmed();
        return Covariant(*deg, std::move(coeffs));
    }

    int order() const { return order_; }
    const std::vector<Polynomial>& coefficients() const { return coeffs_; }
    const Polynomial& coefficient(int k) const { return coeffs_.at(k); }
    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& c) { return c.is_zero(); });
    }

    /// Full polynomial in alpha, beta, u, v.
    Polynomial polynomial() const {
        Polynomial out;
        for (int k = 0; k <= order_; ++k) {
            if (coeffs_[k].is_zero()) continue;
            out += coeffs_[k] * Polynomial::variable(Var::u, order_ - k) * Polynomial::variable(Var::v, k);
        }
        return out;
    }

    Covariant& operator+=(const Covariant& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (o.order_ != order_) throw std::invalid_argument("adding covariants of different order");
        for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    Covariant& scale(const Rational& c) {
        for (auto& p : coeffs_) p.scale(c);
        return *this;
    }

    friend Covariant operator+(Covariant a, const Covariant& b) { return a += b; }
    friend Covariant operator-(Covariant a, Covariant b) { return a += b.scale(-1); }
    friend Covariant operator*(const Rational& c, Covariant a) { return a.scale(c); }

    friend Covariant operator*(const Covariant& a, const Covariant& b) {
        std::vector<Polynomial> out(a.order_ + b.order_ + 1);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; j <= b.order_; ++j) {
                if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Covariant(a.order_ + b.order_, std::move(out));
    }

    Covariant pow(int n) const {
        if (n < 0) throw std::invalid_argument("negative covariant power");
        Covariant result(0, {Polynomial(1)}), base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Covariant& a, const Covariant& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.order_ != b.order_) return false;
        for (int k = 0; k <= a.order_; ++k) {
            if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
        }
        return true;
    }

    /// Number of stored terms over all coefficients.
    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_) n += c.size();
        return n;
    }

private:
    int order_ = 0;
    std::vector<Polynomial> coeffs_{Polynomial()};

    template <std::size_t N>
    static Covariant generic_form(const std::array<Var, N>& vars) {
        std::vector<Polynomial> coeffs;
        for (Var v : vars) coeffs.push_back(Polynomial::variable(v));
        return Covariant(static_cast<int>(N) - 1, std::move(coeffs));
    }
};

/// (d_alpha, d_beta, order) read off from the exponents.
inline CovariantGrade covariant_grades(const Covariant& c) {
    if (c.is_zero()) throw std::domain_error("grades undefined for the zero covariant");
    std::optional<int> da, db;
    const std::vector<Var> alpha(kAlpha.begin(), kAlpha.end());
    const std::vector<Var> beta(kBeta.begin(), kBeta.end());
    for (const auto& coeff : c.coefficients()) {
        if (coeff.is_zero()) continue;
        const auto a = coeff.homogeneous_degree(alpha);
        const auto b = coeff.homogeneous_degree(beta);
        if (!a || !b || (da && *da != *a) || (db && *db != *b)) {
            throw std::invalid_argument("covariant is not homogeneous in the coefficients");
        }
        da = a;
        db = b;
    }
    return {*da, *db, c.order()};
}

namespace detail {

/// Scalar weights s(k1, k2) of C1[k1] C2[k2] in the i-th transvectant,
/// prefactor included.
inline std::vector<std::vector<Rational>> transvectant_weights(int n1, int n2, int i) {
    std::vector<std::vector<Rational>> w(n1 + 1, std::vector<Rational>(n2 + 1));
    const Rational prefactor = make_rational(factorial(n1 - i) * factorial(n2 - i), factorial(n1) * factorial(n2));
    for (int k1 = 0; k1 <= n1; ++k1) {
        for (int k2 = 0; k2 <= n2; ++k2) {
            const int t = k1 + k2 - i;
            if (t < 0 || t > n1 + n2 - 2 * i) continue;
            Integer s = 0;
            for (int j = 0; j <= i; ++j) {
                Integer term = binomial(i, j) * falling_factorial(n1 - k1, i - j) * falling_factorial(k1, j) *
                               falling_factorial(n2 - k2, j) * falling_factorial(k2, i - j);
                if (j % 2) s -= term; else s += term;
            }
            w[k1][k2] = Rational(s) * prefactor;
        }
    }
    return w;
}

}  // namespace detail

/// i-th transvectant
///   (n1-i)!(n2-i)!/(n1! n2!) sum_j (-1)^j C(i,j)
///     d^i f1 / du^(i-j) dv^j  *  d^i f2 / du^j dv^(i-j).
/// Zero when i exceeds either order.
inline Covariant transvectant(const Covariant& f1, const Covariant& f2, int i) {
    if (i < 0) throw std::invalid_argument("negative transvectant index");
    const int n1 = f1.order(), n2 = f2.order();
    if (i > std::min(n1, n2)) return Covariant::zero(std::max(0, n1 + n2 - 2 * i));
    const auto w = detail::transvectant_weights(n1, n2, i);
    const int order = n1 + n2 - 2 * i;
    std::vector<Polynomial> out(order + 1);
    for (int k1 = 0; k1 <= n1; ++k1) {
        const Polynomial& a = f1.coefficient(k1);
        if (a.is_zero()) continue;
        for (int k2 = 0; k2 <= n2; ++k2) {
            if (w[k1][k2] == 0) continue;
            const Polynomial& b = f2.coefficient(k2);
            if (b.is_zero()) continue;
            Polynomial prod = a * b;
            out[k1 + k2 - i] += prod.scale(w[k1][k2]);
        }
    }
    return Covariant(order, std::move(out));
}

/// Linear derivation on coefficient polynomials: each variable maps to a
/// rational multiple of another variable (or to zero when absent).
class CoefficientDerivation {
public:
    void set(Var from, Var to, const Rational& factor) { images_[from] = {to, factor}; }

    /// Upper unipotent generator: alpha_i -> (n-i+1) alpha_(i-1).
    static const CoefficientDerivation& raising() {
        static const CoefficientDerivation d = [] {
            CoefficientDerivation r;
            for (int i = 1; i <= 4; ++i) r.set(kAlpha[i], kAlpha[i - 1], 4 - i + 1);
            for (int i = 1; i <= 6; ++i) r.set(kBeta[i], kBeta[i - 1], 6 - i + 1);
            return r;
        }();
        return d;
    }

    /// Lower unipotent generator: alpha_i -> (i+1) alpha_(i+1).
    static const CoefficientDerivation& lowering() {
        static const CoefficientDerivation d = [] {
            CoefficientDerivation r;
            for (int i = 0; i < 4; ++i) r.set(kAlpha[i], kAlpha[i + 1], i + 1);
            for (int i = 0; i < 6; ++i) r.set(kBeta[i], kBeta[i + 1], i + 1);
            return r;
        }();
        return d;
    }

    Polynomial operator()(const Polynomial& p) const {
        if (p.is_zero()) return p;
        Alphabet target = p.alphabet();
        std::vector<Var> extra;
        for (Var v : p.support()) {
            auto it = images_.find(v);
            if (it != images_.end()) extra.push_back(it->second.first);
        }
        target = target | Alphabet(extra);
        const Polynomial src = p.over(target);
        struct Step { int from, to; Rational factor; };
        std::vector<Step> steps;
        for (std::size_t i = 0; i < target.size(); ++i) {
            auto it = images_.find(target[i]);
            if (it != images_.end()) {
                steps.push_back({static_cast<int>(i), target.position(it->second.first), it->second.second});
            }
        }
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (const auto& t : src.terms()) {
            for (const auto& s : steps) {
                const int e = t.mono.e[s.from];
                if (e == 0) continue;
                Monomial m = t.mono;
                m.e[s.from] = checked_exponent(e - 1);
                m.e[s.to] = checked_exponent(long(m.e[s.to]) + 1);
                Rational c = t.coeff * s.factor * e;
                auto [it, inserted] = acc.try_emplace(m, c);
                if (!inserted) it->second += c;
            }
        }
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (c != 0) terms.push_back({m, std::move(c)});
        }
        return Polynomial::from_terms(target, std::move(terms));
    }

    /// exp(kappa * delta) p; the series terminates for locally nilpotent delta.
    Polynomial exponential(const Polynomial& p, const Rational& kappa, int max_terms = 4096) const {
        Polynomial total = p, cur = p;
        Rational scale = 1;
        for (int k = 1; !cur.is_zero(); ++k) {
            if (k > max_terms) throw std::runtime_error("derivation series did not terminate");
            cur = (*this)(cur);
            scale *= kappa / k;
            if (!cur.is_zero()) total += Polynomial(cur).scale(scale);
        }
        return total;
    }

private:
    std::map<Var, std::pair<Var, Rational>> images_;
};

/// Weight of a coefficient variable under diag(lambda, 1/lambda): n - 2i.
inline int diagonal_weight(Var v) {
    for (int i = 0; i <= 4; ++i) {
        if (kAlpha[i] == v) return 4 - 2 * i;
    }
    for (int i = 0; i <= 6; ++i) {
        if (kBeta[i] == v) return 6 - 2 * i;
    }
    return 0;
}

/// alpha_i -> lambda^(n-2i) alpha_i.
inline Polynomial diagonal_action(const Polynomial& p, const Rational& lambda) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    std::vector<int> weights;
    for (Var v : p.alphabet()) weights.push_back(diagonal_weight(v));
    for (const auto& t : p.terms()) {
        long w = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) w += long(weights[i]) * t.mono.e[i];
        terms.push_back({t.mono, t.coeff * pow(lambda, w)});
    }
    return Polynomial::from_terms(p.alphabet(), std::move(terms));
}

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

/// Substitution induced on coefficient polynomials by f -> f(T(u, v)).
///
/// T factors as L(t21/t11) D(t11) U(t12/t11) when t11 != 0; the unipotent
/// factors act through exponentials of the raising and lowering derivations.
inline Polynomial sl2_transform_coefficients(const Polynomial& p, const Matrix2& T) {
    const Rational det = T[0][0] * T[1][1] - T[0][1] * T[1][0];
    if (det != 1) throw std::invalid_argument("not unimodular");
    if (T[0][0] == 0) {
        // T = U(1) T' with T' = U(-1) T, whose top-left entry is -t21 != 0.
        const Matrix2 Tp{{{T[0][0] - T[1][0], T[0][1] - T[1][1]}, {T[1][0], T[1][1]}}};
        return CoefficientDerivation::raising().exponential(sl2_transform_coefficients(p, Tp), 1);
    }
    const Rational a = T[0][0];
    Polynomial q = CoefficientDerivation::raising().exponential(p, T[0][1] / a);
    q = diagonal_action(q, a);
    return CoefficientDerivation::lowering().exponential(q, T[1][0] / a);
}

/// Psi(alpha'; u, v) where alpha' are the coefficients of f(T(u, v)) and g(T(u, v)).
inline Covariant sl2_transform(const Covariant& c, const Matrix2& T) {
    std::vector<Polynomial> out;
    for (const auto& coeff : c.coefficients()) out.push_back(sl2_transform_coefficients(coeff, T));
    return Covariant(c.order(), std::move(out));
}

/// Psi(alpha; T(u, v)): substitutes the linear forms for u and v.
inline Covariant substitute_uv(const Covariant& c, const Matrix2& T) {
    const int n = c.order();
    // (t11 u + t12 v)^(n-k) (t21 u + t22 v)^k expanded as rational rows.
    std::vector<Polynomial> out(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (c.coefficient(k).is_zero()) continue;
        std::vector<Rational> row(n + 1);
        for (int a = 0; a <= n - k; ++a) {
            const Rational pa = Rational(binomial(n - k, a)) * pow(T[0][0], n - k - a) * pow(T[0][1], a);
            if (pa == 0) continue;
            for (int b = 0; b <= k; ++b) {
                row[a + b] += pa * Rational(binomial(k, b)) * pow(T[1][0], k - b) * pow(T[1][1], b);
            }
        }
        for (int j = 0; j <= n; ++j) {
            if (row[j] != 0) out[j] += Polynomial(c.coefficient(k)).scale(row[j]);
        }
    }
    return Covariant(n, std::move(out));
}

/// Checks Psi(alpha'; u, v) == Psi(alpha; T(u, v)).
inline bool is_equivariant(const Covariant& c, const Matrix2& T) {
    return sl2_transform(c, T) == substitute_uv(c, T);
}

inline std::ostream& operator<<(std::ostream& os, const Covariant& c) { return os << c.polynomial(); }

inline nlohmann::json to_json(const Covariant& c) {
    nlohmann::json j = c.polynomial().to_json();
    if (c.is_zero()) {
        j["grade"] = nullptr;
    } else {
        const auto g = covariant_grades(c);
        j["grade"] = {g.d_alpha, g.d_beta, g.order};
    }
    return j;
}

}  // namespace weyl_e8
