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
#include <weyl_e8/semiinvariants.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace weyl_e8 {

enum class Frame { ab, cd };

struct JacobiGrade {
    int d_a = 0, d_b = 0, index = 0, weight = 0, order = 0;
    friend bool operator==(const JacobiGrade&, const JacobiGrade&) = default;
};

namespace detail {

struct FrameVars {
    std::array<Var, 5> first;   // a0..a4 or c0..c4; entry 1 of the a-frame is unused
    std::array<Var, 7> second;  // b0..b6 or d0..d6; entry 1 of the d-frame is unused
};

inline const FrameVars& frame_vars(Frame f) {
    static const FrameVars ab{{Var::a0, Var::count_, Var::a2, Var::a3, Var::a4},
                              {Var::b0, Var::b1, Var::b2, Var::b3, Var::b4, Var::b5, Var::b6}};
    static const FrameVars cd{{Var::c0, Var::c1, Var::c2, Var::c3, Var::c4},
                              {Var::d0, Var::count_, Var::d2, Var::d3, Var::d4, Var::d5, Var::d6}};
    return f == Frame::ab ? ab : cd;
}

/// (weight, index, which-degree) of a frame variable; which = 0 for a/c, 1 for b/d.
inline std::optional<std::array<int, 3>> jacobi_var_grade(Var v) {
    for (Frame f : {Frame::ab, Frame::cd}) {
        const auto& fv = frame_vars(f);
        for (int i = 0; i < 5; ++i) {
            if (fv.first[i] == v) return std::array<int, 3>{4 - 6 * i, i, 0};
        }
        for (int j = 0; j < 7; ++j) {
            if (fv.second[j] == v) return std::array<int, 3>{6 - 6 * j, j, 1};
        }
    }
    return std::nullopt;
}

/// Renames frame variables to alpha/beta (to_coefficients) or back.
inline std::map<Var, Var> coefficient_renaming(Frame f, bool to_coefficients) {
    std::map<Var, Var> m;
    const auto& fv = frame_vars(f);
    for (int i = 0; i < 5; ++i) {
        if (fv.first[i] == Var::count_) continue;
        if (to_coefficients) m[fv.first[i]] = kAlpha[i]; else m[kAlpha[i]] = fv.first[i];
    }
    for (int j = 0; j < 7; ++j) {
        if (fv.second[j] == Var::count_) continue;
        if (to_coefficients) m[fv.second[j]] = kBeta[j]; else m[kBeta[j]] = fv.second[j];
    }
    return m;
}

/// sum_k t^k / k! Omega^k p for the raising derivation Omega.
inline Polynomial translate_series(const Polynomial& p, const Polynomial& t) {
    Polynomial total, cur = p, tk = Polynomial(1);
    Rational inv_fact = 1;
    for (int k = 0; !cur.is_zero(); ++k) {
        if (k > 0) {
            cur = CoefficientDerivation::raising()(cur);
            if (cur.is_zero()) break;
            inv_fact /= k;
            tk = tk * t;
        }
        total += cur * tk * Polynomial(inv_fact);
    }
    return total;
}

inline Polynomial drop_variable(const Polynomial& p, Var v) {
    if (!p.alphabet().contains(v)) return p;
    return p.coefficient(v, 0);
}

inline Polynomial rename_present(const Polynomial& p, const std::map<Var, Var>& names) {
    std::map<Var, Var> used;
    for (Var v : p.alphabet()) {
        auto it = names.find(v);
        if (it != names.end()) used.insert(*it);
    }
    return p.rename(used);
}

}  // namespace detail

/// Which frame a polynomial lives in; constants count as the a-frame.
inline Frame frame_of(const Polynomial& p) {
    const Alphabet s = p.support();
    if (a_alphabet().includes(s)) return Frame::ab;
    if (c_alphabet().includes(s)) return Frame::cd;
    throw std::invalid_argument("polynomial mixes frames or uses foreign variables");
}

/// (d_a, d_b, m, k, order) with k = 4 d_a + 6 d_b - 6 m and order = k + 4 m.
inline JacobiGrade jacobi_grades(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("grades undefined for the zero polynomial");
    std::optional<JacobiGrade> g;
    for (const auto& t : p.terms()) {
        JacobiGrade h;
        for (std::size_t i = 0; i < p.alphabet().size(); ++i) {
            const int e = t.mono.e[i];
            if (e == 0) continue;
            const auto vg = detail::jacobi_var_grade(p.alphabet()[i]);
            if (!vg) throw std::invalid_argument("not a frame variable: " + std::string(name_of(p.alphabet()[i])));
            h.weight += (*vg)[0] * e;
            h.index += (*vg)[1] * e;
            ((*vg)[2] == 0 ? h.d_a : h.d_b) += e;
        }
        h.order = h.weight + 4 * h.index;
        if (g && !(*g == h)) throw std::invalid_argument("not homogeneous in the trigrading");
        g = h;
    }
    return *g;
}

struct JacobiPolynomial {
    Polynomial poly;
    JacobiGrade grade;

    static JacobiPolynomial from(Polynomial p) {
        JacobiGrade g = jacobi_grades(p);
        return {std::move(p), g};
    }
};

inline nlohmann::json to_json(const JacobiPolynomial& j) {
    nlohmann::json out = j.poly.to_json();
    out["grade"] = {{"d_a", j.grade.d_a}, {"d_b", j.grade.d_b}, {"index", j.grade.index},
                    {"weight", j.grade.weight}, {"order", j.grade.order}};
    return out;
}

/// Binomial translation images for a_i, b_j in terms of c, d (or the reverse).
inline SubstitutionMap translation_images(Frame from) {
    const Frame to = from == Frame::ab ? Frame::cd : Frame::ab;
    const auto& src = detail::frame_vars(from);
    const auto& dst = detail::frame_vars(to);
    // Centre -c1/(4 c0) for a -> c; -b1/(6 b0) for c -> a.
    const Polynomial t = from == Frame::ab
                             ? Polynomial(make_rational(-1, 4)) * var(Var::c1) * var(Var::c0).pow(-1)
                             : Polynomial(make_rational(-1, 6)) * var(Var::b1) * var(Var::b0).pow(-1);
    SubstitutionMap s;
    auto fill = [&](const auto& sv, const auto& dv, int n) {
        for (int i = 0; i <= n; ++i) {
            if (sv[i] == Var::count_) continue;
            Polynomial img;
            for (int j = 0; j <= i; ++j) {
                if (dv[j] == Var::count_) continue;
                img += var(dv[j]) * t.pow(i - j) * Polynomial(Rational(binomial(n - j, n - i)));
            }
            s[sv[i]] = img;
        }
    };
    fill(src.first, dst.first, 4);
    fill(src.second, dst.second, 6);
    return s;
}

/// a, b -> c, d. Expands exp(t Omega) with t = -c1/(4 c0), then sets d1 = 0.
inline Polynomial ab_to_cd(const Polynomial& p) {
    if (p.is_zero()) return p;
    if (!a_alphabet().includes(p.support())) throw std::invalid_argument("ab_to_cd expects an a-frame polynomial");
    const Polynomial q = detail::rename_present(p, detail::coefficient_renaming(Frame::ab, true));
    const Polynomial t = Polynomial(make_rational(-1, 4)) * var(Var::alpha1) * var(Var::alpha0).pow(-1);
    Polynomial r = detail::drop_variable(detail::translate_series(q, t), Var::beta1);
    r = detail::rename_present(r, detail::coefficient_renaming(Frame::cd, false));
    return r.is_zero() ? r : r.trimmed();
}

/// c, d -> a, b with centre -b1/(6 b0); sets a1 = 0.
inline Polynomial cd_to_ab(const Polynomial& p) {
    if (p.is_zero()) return p;
    if (!c_alphabet().includes(p.support())) throw std::invalid_argument("cd_to_ab expects a c-frame polynomial");
    const Polynomial q = detail::rename_present(p, detail::coefficient_renaming(Frame::cd, true));
    const Polynomial t = Polynomial(make_rational(-1, 6)) * var(Var::beta1) * var(Var::beta0).pow(-1);
    Polynomial r = detail::drop_variable(detail::translate_series(q, t), Var::alpha1);
    r = detail::rename_present(r, detail::coefficient_renaming(Frame::ab, false));
    return r.is_zero() ? r : r.trimmed();
}

inline bool has_negative_exponent(const Polynomial& p) {
    for (const auto& t : p.terms()) {
        for (std::size_t i = 0; i < p.alphabet().size(); ++i) {
            if (t.mono.e[i] < 0) return true;
        }
    }
    return false;
}

/// Membership in both polynomial rings: p and its translate are polynomial.
inline bool is_jacobi_form(const Polynomial& p) {
    if (p.is_zero()) return true;
    jacobi_grades(p);
    if (has_negative_exponent(p)) return false;
    const Polynomial other = frame_of(p) == Frame::ab ? ab_to_cd(p) : cd_to_ab(p);
    return !has_negative_exponent(other);
}

/// a_i -> a_hat_i, b_j -> b_hat_j, centred on the quartic.
inline Semiinvariant psi_J(const Polynomial& p) {
    if (p.is_zero()) return {p, 0};
    const JacobiGrade g = jacobi_grades(p);
    if (frame_of(p) != Frame::ab) throw std::invalid_argument("psi_J expects an a-frame polynomial");
    const Polynomial q = detail::rename_present(p, detail::coefficient_renaming(Frame::ab, true));
    const Polynomial t = Polynomial(make_rational(-1, 4)) * var(Var::alpha1) * var(Var::alpha0).pow(-1);
    Polynomial r = detail::translate_series(q, t);
    if (has_negative_exponent(r)) throw std::domain_error("not in J");
    return {r.trimmed(), g.order};
}

/// alpha_i -> a_i with a1 = 0, beta_j -> b_j.
inline JacobiPolynomial psi_J_inverse(const Semiinvariant& s) {
    if (!coefficient_alphabet().includes(s.poly.support())) {
        throw std::invalid_argument("psi_J_inverse expects a polynomial in alpha, beta");
    }
    Polynomial r = detail::drop_variable(s.poly, Var::alpha1);
    r = detail::rename_present(r, detail::coefficient_renaming(Frame::ab, false));
    if (r.is_zero()) return {r, {}};
    r = r.trimmed();
    return JacobiPolynomial::from(std::move(r));
}

}  // namespace weyl_e8
