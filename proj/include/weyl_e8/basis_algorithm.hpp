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
#include <weyl_e8/generator_catalog.hpp>
#include <weyl_e8/jacobi_ring.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace weyl_e8 {

struct MonomialAnsatz {
    int weight = 0, index = 0;
    std::vector<Polynomial> monomials;
};

namespace detail {

struct IndexedVar {
    Var v;
    int weight, index;
};

inline const std::vector<IndexedVar>& positive_index_vars() {
    static const std::vector<IndexedVar> vars{
        {Var::a2, -8, 2},  {Var::a3, -14, 3}, {Var::a4, -20, 4}, {Var::b1, 0, 1},  {Var::b2, -6, 2},
        {Var::b3, -12, 3}, {Var::b4, -18, 4}, {Var::b5, -24, 5}, {Var::b6, -30, 6}};
    return vars;
}

inline void enumerate_index_part(std::size_t pos, int index_left, int weight_left, Polynomial& acc,
                                 std::vector<Polynomial>& out) {
    const auto& vars = positive_index_vars();
    if (pos == vars.size()) {
        if (index_left != 0 || weight_left < 0) return;
        // 4 x + 6 y = weight_left for the exponents of a0 and b0.
        for (int y = 0; 6 * y <= weight_left; ++y) {
            const int rest = weight_left - 6 * y;
            if (rest % 4) continue;
            out.push_back(acc * var(Var::a0).pow(rest / 4) * var(Var::b0).pow(y));
        }
        return;
    }
    const IndexedVar& iv = vars[pos];
    Polynomial cur = acc;
    for (int e = 0; e * iv.index <= index_left; ++e) {
        enumerate_index_part(pos + 1, index_left - e * iv.index, weight_left - e * iv.weight, cur, out);
        cur *= var(iv.v);
    }
}

/// Rank of a list of polynomials as vectors over their monomials.
inline std::size_t polynomial_rank(const std::vector<Polynomial>& polys) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> column;
    Alphabet common;
    for (const auto& p : polys) common = common | p.alphabet();
    RowEchelon echelon;
    for (const auto& p : polys) {
        const Polynomial q = p.over(common);
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (const auto& t : q.terms()) {
            auto it = column.try_emplace(t.mono, column.size()).first;
            entries.emplace_back(it->second, t.coeff);
        }
        echelon.insert(to_integer_row(entries));
    }
    return echelon.rank();
}

}  // namespace detail

/// All a-alphabet monomials of weight k and index m, in descending term order.
inline MonomialAnsatz enumerate_monomials(int k, int m) {
    if (m < 0) throw std::invalid_argument("index must be non-negative");
    std::vector<Polynomial> found;
    Polynomial acc(1);
    detail::enumerate_index_part(0, m, k, acc, found);
    Polynomial sum;
    for (const auto& p : found) sum += p;
    MonomialAnsatz out{k, m, {}};
    if (sum.is_zero()) return out;
    sum = sum.trimmed();
    for (const auto& t : sum.terms()) out.monomials.push_back(Polynomial::from_terms(sum.alphabet(), {{t.mono, 1}}));
    return out;
}

struct BasisResult {
    int weight = 0, index = 0;
    std::size_t ansatz_size = 0, constraints = 0;
    double seconds = 0;
    std::vector<JacobiPolynomial> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// Kills every negative c0 power of the translated ansatz; returns the
/// nullspace as primitive integer combinations of ansatz monomials.
inline BasisResult jacobi_basis(int k, int m) {
    const auto start = std::chrono::steady_clock::now();
    const MonomialAnsatz ansatz = enumerate_monomials(k, m);
    BasisResult out;
    out.weight = k;
    out.index = m;
    out.ansatz_size = ansatz.monomials.size();
    const std::size_t n = ansatz.monomials.size();
    if (n > 0) {
        const Alphabet cd = c_alphabet();
        const int c0 = cd.position(Var::c0);
        std::unordered_map<Monomial, std::vector<std::pair<std::size_t, Rational>>, MonomialHash> rows;
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial image = ab_to_cd(ansatz.monomials[j]).over(cd);
            for (const auto& t : image.terms()) {
                if (t.mono.e[c0] < 0) rows[t.mono].emplace_back(j, t.coeff);
            }
        }
        out.constraints = rows.size();
        RowEchelon echelon;
        for (auto& [mono, entries] : rows) {
            echelon.insert(to_integer_row(entries));
            if (echelon.rank() == n) break;
        }
        for (const auto& x : echelon.nullspace(n)) {
            Polynomial p;
            for (std::size_t j = 0; j < n; ++j) {
                if (x[j] != 0) p += ansatz.monomials[j] * Polynomial(x[j]);
            }
            out.basis.push_back(JacobiPolynomial::from(p.trimmed()));
        }
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

inline nlohmann::json to_json(const BasisResult& r, bool with_polynomials = true) {
    nlohmann::json out{{"weight", r.weight},           {"index", r.index},
                       {"dimension", r.dimension()},   {"ansatz_size", r.ansatz_size},
                       {"constraints", r.constraints}, {"seconds", r.seconds}};
    if (with_polynomials) {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& b : r.basis) basis.push_back(b.poly.to_string());
        out["basis"] = basis;
    }
    return out;
}

struct LbTable {
    std::vector<std::size_t> dimensions;  // dim J_{-4m, m}
    std::vector<std::size_t> decomposable;
    std::vector<long> generators;         // d^lb_m
    std::vector<double> seconds;
};

/// d^lb_m = dim J_{-4m,m} minus the rank of all products J_{-4i,i} J_{-4j,j}, i + j = m.
inline LbTable lb_generator_counts(int max_index) {
    if (max_index < 0) throw std::invalid_argument("max index must be non-negative");
    LbTable t;
    std::vector<std::vector<Polynomial>> bases(max_index + 1);
    for (int m = 0; m <= max_index; ++m) {
        const auto start = std::chrono::steady_clock::now();
        const BasisResult r = jacobi_basis(-4 * m, m);
        for (const auto& b : r.basis) bases[m].push_back(b.poly);
        std::vector<Polynomial> products;
        for (int i = 1; 2 * i <= m; ++i) {
            const auto& lhs = bases[i];
            const auto& rhs = bases[m - i];
            for (std::size_t p = 0; p < lhs.size(); ++p) {
                for (std::size_t q = (i == m - i ? p : 0); q < rhs.size(); ++q) products.push_back(lhs[p] * rhs[q]);
            }
        }
        const std::size_t rank = products.empty() ? 0 : detail::polynomial_rank(products);
        t.dimensions.push_back(r.dimension());
        t.decomposable.push_back(rank);
        // The constants at m = 0 are not generators.
        t.generators.push_back(m == 0 ? 0 : static_cast<long>(r.dimension()) - static_cast<long>(rank));
        t.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return t;
}

inline nlohmann::json to_json(const LbTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t m = 0; m < t.generators.size(); ++m) {
        rows.push_back({{"index", m},
                        {"dimension", t.dimensions[m]},
                        {"decomposable", t.decomposable[m]},
                        {"d_lb", t.generators[m]},
                        {"seconds", t.seconds[m]}});
    }
    return rows;
}

struct CrossRingCell {
    int index = 0, order = 0;
    std::size_t dimension = 0, products = 0, rank = 0;

    bool pass() const { return rank == dimension; }
};

namespace detail {

inline void enumerate_products(const std::vector<std::pair<GeneratorLabel, Polynomial>>& gens, std::size_t from,
                               int index_left, int order_left, const Polynomial& acc, std::vector<Polynomial>& out) {
    if (index_left == 0 && order_left == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
        const GeneratorLabel& l = gens[i].first;
        if (l.index > index_left || l.order > order_left) continue;
        enumerate_products(gens, i, index_left - l.index, order_left - l.order, acc * gens[i].second, out);
    }
}

}  // namespace detail

/// Rank of all generator products of index m and order w against dim J_{w-4m,m}.
inline std::vector<CrossRingCell> cross_ring_check(int max_index, int max_order,
                                                   Catalog& catalog = Catalog::instance()) {
    std::vector<std::pair<GeneratorLabel, Polynomial>> gens;
    for (const auto& r : catalog.recipes()) {
        if (r.label.index <= max_index && r.label.order <= max_order) {
            gens.emplace_back(r.label, generator_as_jacobi(r.label, catalog).poly);
        }
    }
    std::vector<CrossRingCell> cells;
    for (int m = 0; m <= max_index; ++m) {
        for (int w = 0; w <= max_order; w += 2) {
            CrossRingCell cell{m, w};
            cell.dimension = jacobi_basis(w - 4 * m, m).dimension();
            std::vector<Polynomial> products;
            if (m == 0 && w == 0) {
                products.push_back(Polynomial(1));
            } else {
                detail::enumerate_products(gens, 0, m, w, Polynomial(1), products);
            }
            cell.products = products.size();
            cell.rank = products.empty() ? 0 : detail::polynomial_rank(products);
            cells.push_back(cell);
        }
    }
    return cells;
}

inline nlohmann::json to_json(const CrossRingCell& c) {
    return {{"index", c.index},       {"order", c.order}, {"dimension", c.dimension},
            {"products", c.products}, {"rank", c.rank},   {"pass", c.pass()}};
}

}  // namespace weyl_e8
