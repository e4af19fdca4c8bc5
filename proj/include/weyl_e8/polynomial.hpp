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

#include <weyl_e8/rational.hpp>
#include <weyl_e8/variables.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace weyl_e8 {

/// Exponent vector indexed by alphabet position.
struct Monomial {
    std::array<std::int16_t, kMaxAlphabet> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](std::int16_t x) { return x == 0; });
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline std::int16_t checked_exponent(long value) {
    if (value > INT16_MAX || value < INT16_MIN) throw std::overflow_error("exponent overflow");
    return static_cast<std::int16_t>(value);
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxAlphabet; ++i) r.e[i] = checked_exponent(long(a.e[i]) + b.e[i]);
    return r;
}

/// Graded lexicographic: true when a precedes b in canonical (descending) order.
inline bool grlex_before(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < kMaxAlphabet; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t words[4];
        std::memcpy(words, m.e.data(), sizeof(words));
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

class Polynomial;
using SubstitutionMap = std::map<Var, Polynomial>;

/// Sparse multivariate Laurent polynomial over the rationals.
///
/// Terms are kept in descending graded lexicographic order with no zero
/// coefficients. Negative exponents are accepted only for variables flagged
/// Laurent in the global table.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    Polynomial(const Rational& c) {  // NOLINT(implicit)
        if (c != 0) terms_.push_back({Monomial{}, c});
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(implicit)
    Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT(implicit)

    static Polynomial variable(Var v, int power = 1) {
        Polynomial p(Alphabet{v});
        Monomial m;
        m.e[0] = checked_exponent(power);
        p.check_laurent(m);
        p.terms_.push_back({m, Rational(1)});
        return p;
    }
    static Polynomial variable(std::string_view name, int power = 1) {
        return variable(var_from_name(name), power);
    }

    /// Builds from raw terms; canonicalizes and validates.
    static Polynomial from_terms(Alphabet alphabet, std::vector<Term> terms) {
        Polynomial p(std::move(alphabet));
        for (const auto& t : terms) p.check_laurent(t.mono);
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rational constant_value() const {
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_[0].coeff;
    }

    int exponent(const Term& t, Var v) const {
        const int pos = alphabet_.position(v);
        return pos < 0 ? 0 : t.mono.e[pos];
    }

    /// Variables that occur with a nonzero exponent.
    Alphabet support() const {
        std::vector<Var> used;
        for (std::size_t i = 0; i < alphabet_.size(); ++i) {
            for (const auto& t : terms_) {
                if (t.mono.e[i] != 0) {
                    used.push_back(alphabet_[i]);
                    break;
                }
            }
        }
        return Alphabet(std::move(used));
    }

    /// Re-expresses this polynomial over a superset alphabet.
    Polynomial over(const Alphabet& target) const {
        if (target == alphabet_) return *this;
        std::array<int, kMaxAlphabet> map{};
        for (std::size_t i = 0; i < alphabet_.size(); ++i) {
            const int pos = target.position(alphabet_[i]);
            if (pos < 0) {
                bool used = std::any_of(terms_.begin(), terms_.end(),
                                        [&](const Term& t) { return t.mono.e[i] != 0; });
                if (used) throw std::invalid_argument("target alphabet lacks variable " + std::string(name_of(alphabet_[i])));
                map[i] = -1;
            } else {
                map[i] = pos;
            }
        }
        Polynomial r(target);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m;
            for (std::size_t i = 0; i < alphabet_.size(); ++i) {
                if (map[i] >= 0) m.e[map[i]] = t.mono.e[i];
            }
            r.terms_.push_back({m, t.coeff});
        }
        if (!std::is_sorted(r.terms_.begin(), r.terms_.end(), term_before)) {
            std::sort(r.terms_.begin(), r.terms_.end(), term_before);
        }
        return r;
    }

    /// Drops alphabet entries that no term uses.
    Polynomial trimmed() const { return over(support()); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = add(*this, o, 1); }
    Polynomial& operator-=(const Polynomial& o) { return *this = add(*this, o, -1); }
    Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }
    Polynomial& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.coeff *= c;
        }
        return *this;
    }
    Polynomial& operator/=(const Rational& c) {
        if (c == 0) throw std::domain_error("division by zero");
        for (auto& t : terms_) t.coeff /= c;
        return *this;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b, 1); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add(a, b, -1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
    friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.alphabet_ == b.alphabet_) {
            for (std::size_t i = 0; i < a.terms_.size(); ++i) {
                if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
            }
            return true;
        }
        return (a - b).is_zero();
    }

    Polynomial pow(long n) const {
        if (n < 0) return inverse_monomial().pow(-n);
        Polynomial result(1), base = *this;
        while (n > 0) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n > 0) base *= base;
        }
        return result;
    }

    /// Inverse of a single nonzero term with Laurent variables.
    Polynomial inverse_monomial() const {
        if (terms_.size() != 1) throw std::domain_error("only a single term can be inverted");
        Polynomial r(alphabet_);
        Monomial m;
        for (std::size_t i = 0; i < kMaxAlphabet; ++i) m.e[i] = checked_exponent(-long(terms_[0].mono.e[i]));
        r.check_laurent(m);
        r.terms_.push_back({m, Rational(1) / terms_[0].coeff});
        return r;
    }

    Polynomial derivative(Var v) const {
        const int pos = alphabet_.position(v);
        if (pos < 0) return Polynomial(alphabet_);
        Polynomial r(alphabet_);
        for (const auto& t : terms_) {
            const int e = t.mono.e[pos];
            if (e == 0) continue;
            Monomial m = t.mono;
            m.e[pos] = checked_exponent(e - 1);
            r.terms_.push_back({m, t.coeff * e});
        }
        r.canonicalize();
        return r;
    }

    int min_exponent(Var v) const {
        if (is_zero()) throw std::domain_error("undefined for zero polynomial");
        const int pos = alphabet_.position(v);
        if (pos < 0) return 0;
        int lo = INT_MAX;
        for (const auto& t : terms_) lo = std::min<int>(lo, t.mono.e[pos]);
        return lo;
    }

    int max_exponent(Var v) const {
        if (is_zero()) throw std::domain_error("undefined for zero polynomial");
        const int pos = alphabet_.position(v);
        if (pos < 0) return 0;
        int hi = INT_MIN;
        for (const auto& t : terms_) hi = std::max<int>(hi, t.mono.e[pos]);
        return hi;
    }

    /// Coefficient of v^power, as a polynomial in the remaining variables.
    Polynomial coefficient(Var v, int power) const {
        const int pos = alphabet_.position(v);
        Polynomial r(alphabet_);
        for (const auto& t : terms_) {
            const int e = pos < 0 ? 0 : t.mono.e[pos];
            if (e != power) continue;
            Monomial m = t.mono;
            if (pos >= 0) m.e[pos] = 0;
            r.terms_.push_back({m, t.coeff});
        }
        return r;
    }

    /// Total degree in the given variables; throws when terms disagree.
    std::optional<int> homogeneous_degree(const std::vector<Var>& vars) const {
        std::optional<int> deg;
        for (const auto& t : terms_) {
            int d = 0;
            for (Var v : vars) d += exponent(t, v);
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg;
    }

    /// Weighted degree sum_i w(v_i) e_i; nullopt when not homogeneous.
    std::optional<long> weighted_degree(const std::function<long(Var)>& weight) const {
        std::optional<long> deg;
        for (const auto& t : terms_) {
            long d = 0;
            for (std::size_t i = 0; i < alphabet_.size(); ++i) d += weight(alphabet_[i]) * t.mono.e[i];
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg;
    }

    /// Exact substitution. Variables absent from sigma map to themselves.
    Polynomial substitute(const SubstitutionMap& sigma) const;

    /// Exact substitution into a declared target alphabet; variables that are
    /// neither mapped nor in the target raise "unmapped variable".
    Polynomial substitute(const SubstitutionMap& sigma, const Alphabet& target) const {
        for (Var v : support()) {
            if (!sigma.count(v) && !target.contains(v)) {
                throw std::invalid_argument("unmapped variable " + std::string(name_of(v)));
            }
        }
        return substitute(sigma);
    }

    /// Renames variables; cheaper than substitute for pure relabelings.
    Polynomial rename(const std::map<Var, Var>& names) const {
        std::vector<Var> vars;
        for (Var v : alphabet_) {
            auto it = names.find(v);
            vars.push_back(it == names.end() ? v : it->second);
        }
        Alphabet target(vars);
        if (target.size() != alphabet_.size()) throw std::invalid_argument("rename collapses variables");
        Polynomial r(target);
        for (const auto& t : terms_) {
            Monomial m;
            for (std::size_t i = 0; i < alphabet_.size(); ++i) m.e[target.position(vars[i])] = t.mono.e[i];
            r.check_laurent(m);
            r.terms_.push_back({m, t.coeff});
        }
        r.canonicalize();
        return r;
    }

    /// Evaluates at a point; values(v) supplies each variable.
    template <class T, class Lookup>
    T evaluate(Lookup&& values) const {
        std::vector<T> point;
        point.reserve(alphabet_.size());
        for (Var v : alphabet_) point.push_back(values(v));
        T total{};
        for (const auto& t : terms_) {
            T acc = scalar_to<T>(t.coeff);
            for (std::size_t i = 0; i < alphabet_.size(); ++i) {
                const int e = t.mono.e[i];
                if (e != 0) acc *= int_pow(point[i], e);
            }
            total += acc;
        }
        return total;
    }

    template <class T>
    T evaluate_at(const std::map<Var, T>& values) const {
        return evaluate<T>([&](Var v) {
            auto it = values.find(v);
            if (it == values.end()) throw std::invalid_argument("no value for " + std::string(name_of(v)));
            return it->second;
        });
    }

    /// Content-normalized copy: integer coefficients with gcd 1 and positive
    /// leading coefficient. Returns the removed factor through `scale`.
    Polynomial primitive(Rational* scale = nullptr) const {
        if (is_zero()) {
            if (scale) *scale = 1;
            return *this;
        }
        Integer g = 0, l = 1;
        for (const auto& t : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
        }
        Rational factor(g, l);
        factor.canonicalize();
        if (terms_[0].coeff < 0) factor = -factor;
        if (scale) *scale = factor;
        return *this / factor;
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : terms_) {
            std::vector<int> e(t.mono.e.begin(), t.mono.e.begin() + alphabet_.size());
            terms.push_back({{"e", e}, {"c", weyl_e8::to_string(t.coeff)}});
        }
        return {{"alphabet", alphabet_.names()}, {"terms", terms}};
    }

    static Polynomial from_json(const nlohmann::json& j) {
        Alphabet alphabet = Alphabet::from_names(j.at("alphabet").get<std::vector<std::string>>());
        const auto names = j.at("alphabet").get<std::vector<std::string>>();
        if (alphabet.size() != names.size()) throw std::invalid_argument("duplicate alphabet entry");
        std::vector<Term> terms;
        for (const auto& jt : j.at("terms")) {
            const auto e = jt.at("e").get<std::vector<int>>();
            if (e.size() != names.size()) throw std::invalid_argument("exponent length mismatch");
            Monomial m;
            for (std::size_t i = 0; i < e.size(); ++i) {
                m.e[alphabet.position(var_from_name(names[i]))] = checked_exponent(e[i]);
            }
            terms.push_back({m, parse_rational(jt.at("c").get<std::string>())});
        }
        return from_terms(std::move(alphabet), std::move(terms));
    }

    /// Human-readable infix form, e.g. "2*a0*b2 + 5*a2*b0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            c = abs(c);
            std::string mono;
            for (std::size_t i = 0; i < alphabet_.size(); ++i) {
                const int e = t.mono.e[i];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += std::string(name_of(alphabet_[i]));
                if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
            }
            if (mono.empty()) {
                out << weyl_e8::to_string(c);
            } else if (c == 1) {
                out << mono;
            } else {
                out << weyl_e8::to_string(c) << "*" << mono;
            }
            first = false;
        }
        return out.str();
    }

private:
    Alphabet alphabet_;
    std::vector<Term> terms_;

    static bool term_before(const Term& a, const Term& b) { return grlex_before(a.mono, b.mono); }

    void check_laurent(const Monomial& m) const {
        for (std::size_t i = 0; i < alphabet_.size(); ++i) {
            if (m.e[i] < 0 && !is_laurent(alphabet_[i])) {
                throw std::domain_error("negative exponent on non-Laurent variable " + std::string(name_of(alphabet_[i])));
            }
        }
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), term_before);
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().mono == t.mono) {
                merged.back().coeff += t.coeff;
            } else {
                if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
                merged.push_back(std::move(t));
            }
        }
        if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
        terms_ = std::move(merged);
    }

    static Polynomial add(const Polynomial& a0, const Polynomial& b0, int sign) {
        if (b0.is_zero()) return a0;
        if (a0.is_zero()) return sign > 0 ? b0 : -b0;
        const Polynomial* pa = &a0;
        const Polynomial* pb = &b0;
        Polynomial ca, cb;
        if (!(a0.alphabet_ == b0.alphabet_)) {
            Alphabet u = a0.alphabet_ | b0.alphabet_;
            ca = a0.over(u);
            cb = b0.over(u);
            pa = &ca;
            pb = &cb;
        }
        Polynomial r(pa->alphabet_);
        r.terms_.reserve(pa->terms_.size() + pb->terms_.size());
        std::size_t i = 0, j = 0;
        const auto& ta = pa->terms_;
        const auto& tb = pb->terms_;
        while (i < ta.size() || j < tb.size()) {
            if (j == tb.size() || (i < ta.size() && grlex_before(ta[i].mono, tb[j].mono))) {
                r.terms_.push_back(ta[i++]);
            } else if (i == ta.size() || grlex_before(tb[j].mono, ta[i].mono)) {
                r.terms_.push_back({tb[j].mono, sign > 0 ? tb[j].coeff : Rational(-tb[j].coeff)});
                ++j;
            } else {
                Rational c = sign > 0 ? Rational(ta[i].coeff + tb[j].coeff) : Rational(ta[i].coeff - tb[j].coeff);
                if (c != 0) r.terms_.push_back({ta[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    static Polynomial multiply(const Polynomial& a0, const Polynomial& b0) {
        if (a0.is_zero() || b0.is_zero()) {
            return Polynomial(a0.alphabet_ | b0.alphabet_);
        }
        const Polynomial* pa = &a0;
        const Polynomial* pb = &b0;
        Polynomial ca, cb;
        if (!(a0.alphabet_ == b0.alphabet_)) {
            Alphabet u = a0.alphabet_ | b0.alphabet_;
            ca = a0.over(u);
            cb = b0.over(u);
            pa = &ca;
            pb = &cb;
        }
        Polynomial r(pa->alphabet_);
        if (pa->terms_.size() == 1 || pb->terms_.size() == 1) {
            const Polynomial& single = pa->terms_.size() == 1 ? *pa : *pb;
            const Polynomial& other = pa->terms_.size() == 1 ? *pb : *pa;
            const Term& s = single.terms_[0];
            r.terms_.reserve(other.terms_.size());
            for (const auto& t : other.terms_) r.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
            return r;  // multiplying by a monomial preserves grlex order
        }
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(pa->terms_.size() * pb->terms_.size() / 2 + 1);
        Rational prod;
        for (const auto& x : pa->terms_) {
            for (const auto& y : pb->terms_) {
                mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
                auto [it, inserted] = acc.try_emplace(x.mono * y.mono);
                if (inserted) {
                    it->second = prod;
                } else {
                    it->second += prod;
                }
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (c != 0) r.terms_.push_back({m, std::move(c)});
        }
        std::sort(r.terms_.begin(), r.terms_.end(), term_before);
        return r;
    }

    friend class Substituter;
};

/// Recursive substitution sharing partial products between terms that agree
/// on a prefix of variables.
class Substituter {
public:
    Substituter(const Polynomial& p, const SubstitutionMap& sigma) : p_(p), sigma_(sigma) {
        for (Var v : p.alphabet()) {
            auto it = sigma.find(v);
            images_.push_back(it == sigma.end() ? Polynomial::variable(v) : it->second);
            powers_.emplace_back();
        }
    }

    Polynomial run() {
        std::vector<const Term*> terms;
        for (const auto& t : p_.terms()) terms.push_back(&t);
        return recurse(terms, 0);
    }

private:
    const Polynomial& p_;
    const SubstitutionMap& sigma_;
    std::vector<Polynomial> images_;
    std::vector<std::map<int, Polynomial>> powers_;

    const Polynomial& power(std::size_t pos, int e) {
        auto& cache = powers_[pos];
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        Polynomial value;
        if (e == 0) {
            value = Polynomial(1);
        } else if (e < 0) {
            value = power(pos, -e).inverse_monomial();
        } else if (e == 1) {
            value = images_[pos];
        } else {
            value = power(pos, e / 2) * power(pos, e - e / 2);
        }
        return cache.emplace(e, std::move(value)).first->second;
    }

    Polynomial recurse(std::vector<const Term*>& terms, std::size_t pos) {
        if (pos == p_.alphabet().size()) {
            Rational sum = 0;
            for (const Term* t : terms) sum += t->coeff;
            return Polynomial(sum);
        }
        std::map<int, std::vector<const Term*>> groups;
        for (const Term* t : terms) groups[t->mono.e[pos]].push_back(t);
        Polynomial total;
        for (auto& [e, group] : groups) {
            Polynomial rest = recurse(group, pos + 1);
            if (rest.is_zero()) continue;
            total += e == 0 ? rest : rest * power(pos, e);
        }
        return total;
    }
};

inline Polynomial Polynomial::substitute(const SubstitutionMap& sigma) const {
    if (is_zero()) return Polynomial();
    return Substituter(*this, sigma).run();
}

inline Polynomial var(Var v) { return Polynomial::variable(v); }
inline Polynomial var(std::string_view name) { return Polynomial::variable(name); }

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace weyl_e8
