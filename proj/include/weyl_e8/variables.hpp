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

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weyl_e8 {

/// Global variable identifiers. The enumeration order is the term order.
enum class Var : std::uint8_t {
    a0, a2, a3, a4,
    b0, b1, b2, b3, b4, b5, b6,
    c0, c1, c2, c3, c4,
    d0, d2, d3, d4, d5, d6,
    alpha0, alpha1, alpha2, alpha3, alpha4,
    beta0, beta1, beta2, beta3, beta4, beta5, beta6,
    u, v,
    A1, A2, A3, A4, A5, B2, B3, B4, B6,
    E4, E6,
    // Auxiliary variables. d1 only
    // exists transiently while translating frames; x,y,z serve tests.
    d1, x, y, z,
    count_
};

inline constexpr std::size_t kVarCount = static_cast<std::size_t>(Var::count_);

struct VarInfo {
    std::string_view name;
    bool laurent;
};

inline constexpr std::array<VarInfo, kVarCount> kVarTable{{
    {"a0", true}, {"a2", false}, {"a3", false}, {"a4", false},
    {"b0", true}, {"b1", false}, {"b2", false}, {"b3", false}, {"b4", false}, {"b5", false}, {"b6", false},
    {"c0", true}, {"c1", false}, {"c2", false}, {"c3", false}, {"c4", false},
    {"d0", true}, {"d2", false}, {"d3", false}, {"d4", false}, {"d5", false}, {"d6", false},
    {"alpha0", true}, {"alpha1", false}, {"alpha2", false}, {"alpha3", false}, {"alpha4", false},
    {"beta0", true}, {"beta1", false}, {"beta2", false}, {"beta3", false}, {"beta4", false}, {"beta5", false}, {"beta6", false},
    {"u", false}, {"v", false},
    {"A1", false}, {"A2", false}, {"A3", false}, {"A4", false}, {"A5", false},
    {"B2", false}, {"B3", false}, {"B4", false}, {"B6", false},
    {"E4", true}, {"E6", true},
    {"d1", false}, {"x", true}, {"y", true}, {"z", true},
}};

inline constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }
inline constexpr std::string_view name_of(Var v) { return kVarTable[index_of(v)].name; }
inline constexpr bool is_laurent(Var v) { return kVarTable[index_of(v)].laurent; }

inline Var var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (kVarTable[i].name == name) return static_cast<Var>(i);
    }
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

inline bool is_var_name(std::string_view name) {
    return std::any_of(kVarTable.begin(), kVarTable.end(),
                       [&](const VarInfo& info) { return info.name == name; });
}

inline constexpr std::array<Var, 5> kAlpha{Var::alpha0, Var::alpha1, Var::alpha2, Var::alpha3, Var::alpha4};
inline constexpr std::array<Var, 7> kBeta{Var::beta0, Var::beta1, Var::beta2, Var::beta3,
                                          Var::beta4, Var::beta5, Var::beta6};

/// Maximum number of variables a single polynomial may involve.
inline constexpr std::size_t kMaxAlphabet = 16;

/// Sorted, duplicate-free set of variables.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::initializer_list<Var> vars) : Alphabet(std::vector<Var>(vars)) {}
    explicit Alphabet(std::vector<Var> vars) : vars_(std::move(vars)) {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        if (vars_.size() > kMaxAlphabet) throw std::length_error("alphabet exceeds 16 variables");
    }

    static Alphabet from_names(const std::vector<std::string>& names) {
        std::vector<Var> vars;
        for (const auto& n : names) vars.push_back(var_from_name(n));
        return Alphabet(std::move(vars));
    }

    std::size_t size() const { return vars_.size(); }
    bool empty() const { return vars_.empty(); }
    Var operator[](std::size_t i) const { return vars_[i]; }
    const std::vector<Var>& vars() const { return vars_; }
    auto begin() const { return vars_.begin(); }
    auto end() const { return vars_.end(); }

    /// Position of v, or -1.
    int position(Var v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) return -1;
        return static_cast<int>(it - vars_.begin());
    }
    bool contains(Var v) const { return position(v) >= 0; }

    bool includes(const Alphabet& other) const {
        return std::includes(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end());
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (Var v : vars_) out.emplace_back(name_of(v));
        return out;
    }

    friend Alphabet operator|(const Alphabet& a, const Alphabet& b) {
        std::vector<Var> merged;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(merged));
        return Alphabet(std::move(merged));
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Var> vars_;
};

inline const Alphabet& a_alphabet() {
    static const Alphabet alph{Var::a0, Var::a2, Var::a3, Var::a4, Var::b0, Var::b1, Var::b2,
                               Var::b3, Var::b4, Var::b5, Var::b6};
    return alph;
}

inline const Alphabet& c_alphabet() {
    static const Alphabet alph{Var::c0, Var::c1, Var::c2, Var::c3, Var::c4, Var::d0,
                               Var::d2, Var::d3, Var::d4, Var::d5, Var::d6};
    return alph;
}

inline const Alphabet& coefficient_alphabet() {
    static const Alphabet alph{Var::alpha0, Var::alpha1, Var::alpha2, Var::alpha3,
                               Var::alpha4, Var::beta0,  Var::beta1,  Var::beta2,
                               Var::beta3,  Var::beta4,  Var::beta5,  Var::beta6};
    return alph;
}

inline const Alphabet& ab_form_alphabet() {
    static const Alphabet alph{Var::A1, Var::A2, Var::A3, Var::A4, Var::A5, Var::B2,
                               Var::B3, Var::B4, Var::B6, Var::E4, Var::E6};
    return alph;
}

}  // namespace weyl_e8
