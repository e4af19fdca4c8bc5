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

#include <weyl_e8/exact_matrix.hpp>
#include <weyl_e8/expression.hpp>
#include <weyl_e8/identity_tables.hpp>
#include <weyl_e8/jacobi_ring.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace weyl_e8 {

/// num * Delta^(-q) with num in A_i, B_j, E4, E6 and Delta = (E4^3 - E6^2)/1728.
class DeltaFraction {
public:
    DeltaFraction() = default;
    DeltaFraction(Polynomial num, int q = 0) : num_(std::move(num)), q_(q) {}  // NOLINT

    static const Polynomial& delta() {
        static const Polynomial d = (var(Var::E4).pow(3) - var(Var::E6).pow(2)) / Rational(1728);
        return d;
    }
    static DeltaFraction delta_symbol() { return {Polynomial(1), -1}; }

    const Polynomial& numerator() const { return num_; }
    int delta_power() const { return q_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Plain polynomial; fails if a Delta denominator remains.
    Polynomial expanded() const {
        if (q_ > 0) throw std::domain_error("Delta denominator remains");
        return num_ * delta().pow(-q_);
    }

    friend DeltaFraction operator+(const DeltaFraction& a, const DeltaFraction& b) {
        const int q = std::max(a.q_, b.q_);
        return {a.num_ * delta().pow(q - a.q_) + b.num_ * delta().pow(q - b.q_), q};
    }
    friend DeltaFraction operator-(const DeltaFraction& a) { return {-a.num_, a.q_}; }
    friend DeltaFraction operator-(const DeltaFraction& a, const DeltaFraction& b) { return a + (-b); }
    friend DeltaFraction operator*(const DeltaFraction& a, const DeltaFraction& b) {
        return {a.num_ * b.num_, a.q_ + b.q_};
    }
    friend DeltaFraction operator/(const DeltaFraction& a, const DeltaFraction& b) {
        if (b.num_.size() != 1) throw std::domain_error("division by a non-monomial numerator");
        return {a.num_ * b.num_.inverse_monomial(), a.q_ - b.q_};
    }
    DeltaFraction pow(int e) const {
        if (e < 0) return DeltaFraction(Polynomial(1)) / pow(-e);
        return {num_.pow(e), q_ * e};
    }
    friend bool operator==(const DeltaFraction& a, const DeltaFraction& b) { return (a - b).is_zero(); }

    /// d/dv for v not in {E4, E6}.
    DeltaFraction derivative(Var v) const {
        if (v == Var::E4 || v == Var::E6) throw std::invalid_argument("derivative through Delta not supported");
        return {num_.derivative(v), q_};
    }

    template <class T>
    T evaluate_at(const std::map<Var, T>& point) const {
        const T d = delta().evaluate_at(point);
        return num_.evaluate_at(point) / int_pow(d, q_);
    }

private:
    Polynomial num_;
    int q_ = 0;
};

/// Expression algebra over DeltaFraction; unbound variable names become variables.
struct DeltaFractionAlgebra {
    std::map<std::string, DeltaFraction> bindings;

    DeltaFraction constant(const Rational& r) const { return Polynomial(r); }
    DeltaFraction symbol(const std::string& name) const {
        if (auto it = bindings.find(name); it != bindings.end()) return it->second;
        if (name == "Delta") return DeltaFraction::delta_symbol();
        if (is_var_name(name)) return var(name);
        throw std::out_of_range("unbound symbol " + name);
    }
    DeltaFraction add(const DeltaFraction& a, const DeltaFraction& b) const { return a + b; }
    DeltaFraction sub(const DeltaFraction& a, const DeltaFraction& b) const { return a - b; }
    DeltaFraction mul(const DeltaFraction& a, const DeltaFraction& b) const { return a * b; }
    DeltaFraction div(const DeltaFraction& a, const DeltaFraction& b) const { return a / b; }
    DeltaFraction neg(const DeltaFraction& a) const { return -a; }
    DeltaFraction pow(const DeltaFraction& a, int e) const { return a.pow(e); }
};

/// Expression algebra over Laurent polynomials; divisors must be monomials.
struct PolynomialAlgebra {
    std::map<std::string, Polynomial> bindings;

    Polynomial constant(const Rational& r) const { return Polynomial(r); }
    Polynomial symbol(const std::string& name) const {
        if (auto it = bindings.find(name); it != bindings.end()) return it->second;
        if (is_var_name(name)) return var(name);
        throw std::out_of_range("unbound symbol " + name);
    }
    Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
    Polynomial sub(const Polynomial& a, const Polynomial& b) const { return a - b; }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
    Polynomial div(const Polynomial& a, const Polynomial& b) const {
        if (b.size() != 1) throw std::domain_error("division by a non-monomial");
        return a * b.inverse_monomial();
    }
    Polynomial neg(const Polynomial& a) const { return -a; }
    Polynomial pow(const Polynomial& a, int e) const { return a.pow(e); }
};

namespace identity_data {

inline const Definitions& ab_in_forms() {
    static const Definitions d = parse_definitions(tables::kAbInModularForms);
    return d;
}
inline const Definitions& cd_in_forms() {
    static const Definitions d = parse_definitions(tables::kCdInModularForms);
    return d;
}
inline const Definitions& forms_in_ab() {
    static const Definitions d = parse_definitions(tables::kModularFormsInAb);
    return d;
}
inline const Definitions& forms_in_cd() {
    static const Definitions d = parse_definitions(tables::kModularFormsInCd);
    return d;
}
inline const Definitions& p165() {
    static const Definitions d = parse_definitions(tables::kP165);
    return d;
}
inline const Definitions& p165_over_e4() {
    static const Definitions d = parse_definitions(tables::kP165OverE4InCd);
    return d;
}

/// Frame variables as DeltaFractions in A_i, B_j, E4, E6.
inline std::map<std::string, DeltaFraction> frame_in_forms(Frame f) {
    DeltaFractionAlgebra alg;
    if (f == Frame::cd) alg.bindings["P165"] = find_definition(p165(), "P165")->evaluate(alg);
    std::map<std::string, DeltaFraction> out;
    for (const auto& [name, e] : f == Frame::ab ? ab_in_forms() : cd_in_forms()) out[name] = e->evaluate(alg);
    return out;
}

}  // namespace identity_data

/// A_i, B_j and Delta as polynomials in the given frame.
inline std::map<std::string, Polynomial> modular_forms_in_frame(Frame f) {
    PolynomialAlgebra alg;
    const Definitions& defs = f == Frame::ab ? identity_data::forms_in_ab() : identity_data::forms_in_cd();
    alg.bindings["Delta"] = find_definition(defs, "Delta")->evaluate(alg);
    std::map<std::string, Polynomial> out;
    for (const auto& [name, e] : defs) out[name] = e->evaluate(alg);
    return out;
}

/// Frame variables as DeltaFractions in A_i, B_j, E4, E6.
inline std::map<std::string, DeltaFraction> frame_in_modular_forms(Frame f) {
    return identity_data::frame_in_forms(f);
}

struct IdentityReport {
    std::string id;
    std::string anchor;
    bool pass = false;
    nlohmann::json detail = nlohmann::json::object();
};

inline nlohmann::json to_json(const IdentityReport& r) {
    return {{"id", r.id}, {"anchor", r.anchor}, {"pass", r.pass}, {"detail", r.detail}};
}

inline const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids{"ab-roundtrip", "cd-roundtrip", "delta-frames", "p165-cd", "jacobian-AB"};
    return ids;
}

namespace detail {

inline std::string first_term(const Polynomial& p) {
    if (p.is_zero()) return "0";
    return Polynomial::from_terms(p.alphabet(), {p.terms().front()}).to_string();
}

inline IdentityReport roundtrip_report(Frame f) {
    IdentityReport r;
    r.id = f == Frame::ab ? "ab-roundtrip" : "cd-roundtrip";
    r.anchor = f == Frame::ab ? "A_i(a(A,B,E4,E6), b(A,B,E4,E6)) = A_i" : "A_i(c(A,B,E4,E6), d(A,B,E4,E6)) = A_i";
    const auto frame_values = identity_data::frame_in_forms(f);
    DeltaFractionAlgebra alg;
    alg.bindings = frame_values;
    const Definitions& defs = f == Frame::ab ? identity_data::forms_in_ab() : identity_data::forms_in_cd();
    const DeltaFraction delta = find_definition(defs, "Delta")->evaluate(alg);
    const bool delta_ok = delta == DeltaFraction::delta_symbol();
    alg.bindings["Delta"] = delta;
    r.pass = delta_ok;
    r.detail["delta"] = delta_ok;
    nlohmann::json checked = nlohmann::json::array();
    for (const auto& [name, e] : defs) {
        if (name == "Delta") continue;
        const DeltaFraction diff = e->evaluate(alg) - DeltaFraction(var(name));
        checked.push_back(name);
        if (!diff.is_zero()) {
            r.pass = false;
            r.detail["failed"] = name;
            r.detail["first_difference"] = first_term(diff.numerator());
            break;
        }
    }
    r.detail["checked"] = checked;
    return r;
}

inline IdentityReport delta_frames_report() {
    IdentityReport r{"delta-frames", "a0^3 - 27 b0^2 = c0^3 - 27 d0^2 = Delta", true, {}};
    const Polynomial dab = var(Var::a0).pow(3) - 27 * var(Var::b0).pow(2);
    const Polynomial dcd = var(Var::c0).pow(3) - 27 * var(Var::d0).pow(2);
    const Polynomial translated = ab_to_cd(dab);
    r.detail["ab_to_cd"] = translated == dcd;
    for (Frame f : {Frame::ab, Frame::cd}) {
        const auto values = identity_data::frame_in_forms(f);
        const auto& first = values.at(f == Frame::ab ? "a0" : "c0");
        const auto& second = values.at(f == Frame::ab ? "b0" : "d0");
        const bool ok = first.pow(3) - DeltaFraction(Polynomial(27)) * second.pow(2) == DeltaFraction::delta_symbol();
        r.detail[f == Frame::ab ? "ab_modular" : "cd_modular"] = ok;
        r.pass = r.pass && ok;
    }
    r.pass = r.pass && translated == dcd;
    if (translated != dcd) r.detail["first_difference"] = first_term(translated - dcd);
    return r;
}

inline IdentityReport p165_report() {
    IdentityReport r{"p165-cd", "12 c0 * (P165/E4)(c, d) = P165(A(c,d), B(c,d), 12 c0, 216 d0)", false, {}};
    PolynomialAlgebra alg;
    alg.bindings = modular_forms_in_frame(Frame::cd);
    alg.bindings["E4"] = 12 * var(Var::c0);
    alg.bindings["E6"] = 216 * var(Var::d0);
    const Polynomial lhs = find_definition(identity_data::p165(), "P165")->evaluate(alg);
    const Polynomial rhs = 12 * var(Var::c0) * find_definition(identity_data::p165_over_e4(), "P165_over_E4")->evaluate(alg);
    r.pass = lhs == rhs;
    r.detail["terms"] = lhs.size();
    if (!r.pass) r.detail["first_difference"] = first_term(lhs - rhs);
    return r;
}

inline IdentityReport jacobian_report(std::uint64_t seed, int points) {
    IdentityReport r{"jacobian-AB", "det d(a2,a3,a4,b1..b6)/d(A1,A2,B2,A3,B3,A4,B4,A5,B6) = 2^15 5^4 7^2 / (3^2 Delta^14 E4^2)",
                     true, {}};
    const auto values = identity_data::frame_in_forms(Frame::ab);
    const std::vector<std::string> rows{"a2", "a3", "a4", "b1", "b2", "b3", "b4", "b5", "b6"};
    const std::vector<Var> cols{Var::A1, Var::A2, Var::B2, Var::A3, Var::B3, Var::A4, Var::B4, Var::A5, Var::B6};
    std::vector<std::vector<DeltaFraction>> partials(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (Var v : cols) partials[i].push_back(values.at(rows[i]).derivative(v));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    auto draw = [&] { return make_rational(num(rng), den(rng)); };
    const Rational constant = make_rational(Integer(32768) * 625 * 49, 9);
    nlohmann::json samples = nlohmann::json::array();
    for (int k = 0; k < points; ++k) {
        std::map<Var, Rational> pt;
        Rational delta, e4;
        do {
            for (Var v : cols) pt[v] = draw();
            pt[Var::E4] = e4 = draw();
            pt[Var::E6] = draw();
            delta = DeltaFraction::delta().evaluate_at(pt);
        } while (e4 == 0 || delta == 0);
        ExactMatrix m(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = partials[i][j].evaluate_at(pt);
        }
        const Rational det = determinant(m);
        const Rational expected = constant / (pow(delta, 14) * e4 * e4);
        const bool ok = det == expected;
        samples.push_back({{"E4", to_string(e4)}, {"Delta", to_string(delta)}, {"det", to_string(det)}, {"pass", ok}});
        r.pass = r.pass && ok;
    }
    r.detail["seed"] = seed;
    r.detail["samples"] = samples;
    return r;
}

}  // namespace detail

/// Runs one named identity check. Unknown ids throw std::invalid_argument.
inline IdentityReport verify_identity(const std::string& id, std::uint64_t seed = 1, int jacobian_points = 3) {
    if (id == "ab-roundtrip") return detail::roundtrip_report(Frame::ab);
    if (id == "cd-roundtrip") return detail::roundtrip_report(Frame::cd);
    if (id == "delta-frames") return detail::delta_frames_report();
    if (id == "p165-cd") return detail::p165_report();
    if (id == "jacobian-AB") return detail::jacobian_report(seed, jacobian_points);
    throw std::invalid_argument("unknown identity " + id);
}

inline nlohmann::json to_json(const DeltaFraction& f) {
    return {{"numerator", f.numerator().to_json()}, {"delta_power", f.delta_power()}};
}

inline DeltaFraction delta_fraction_from_json(const nlohmann::json& j) {
    return DeltaFraction(Polynomial::from_json(j.at("numerator")), j.at("delta_power").get<int>());
}

/// The stored expression tables in polynomial JSON form, with an FNV-1a checksum of the table payload.
inline nlohmann::json identity_tables_json() {
    nlohmann::json tables;
    for (Frame f : {Frame::ab, Frame::cd}) {
        const std::string tag = f == Frame::ab ? "ab" : "cd";
        nlohmann::json frame = nlohmann::json::object();
        for (const auto& [name, value] : frame_in_modular_forms(f)) frame[name] = to_json(value);
        tables[tag + "_in_forms"] = frame;
        nlohmann::json forms = nlohmann::json::object();
        for (const auto& [name, value] : modular_forms_in_frame(f)) forms[name] = value.to_json();
        tables["forms_in_" + tag] = forms;
    }
    PolynomialAlgebra plain;
    tables["P165"] = find_definition(identity_data::p165(), "P165")->evaluate(plain).to_json();
    PolynomialAlgebra cd;
    cd.bindings = modular_forms_in_frame(Frame::cd);
    tables["P165_over_E4_cd"] = find_definition(identity_data::p165_over_e4(), "P165_over_E4")->evaluate(cd).to_json();
    return {{"format", "weyl-e8-identity-tables/1"},
            {"checksum", std::to_string(detail::fnv1a(tables.dump()))},
            {"tables", tables}};
}

/// True when the checksum matches the payload and the payload matches the built-in tables.
inline bool identity_tables_consistent(const nlohmann::json& doc) {
    const nlohmann::json& tables = doc.at("tables");
    if (doc.at("checksum").get<std::string>() != std::to_string(detail::fnv1a(tables.dump()))) return false;
    const nlohmann::json fresh = identity_tables_json().at("tables");
    if (tables.size() != fresh.size()) return false;
    for (Frame f : {Frame::ab, Frame::cd}) {
        const std::string tag = f == Frame::ab ? "ab" : "cd";
        for (const auto& [name, value] : frame_in_modular_forms(f)) {
            if (!(delta_fraction_from_json(tables.at(tag + "_in_forms").at(name)) == value)) return false;
        }
        for (const auto& [name, value] : modular_forms_in_frame(f)) {
            if (Polynomial::from_json(tables.at("forms_in_" + tag).at(name)) != value) return false;
        }
    }
    return Polynomial::from_json(tables.at("P165")) == Polynomial::from_json(fresh.at("P165")) &&
           Polynomial::from_json(tables.at("P165_over_E4_cd")) == Polynomial::from_json(fresh.at("P165_over_E4_cd"));
}

}  // namespace weyl_e8
