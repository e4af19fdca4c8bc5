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

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weyl_e8 {

/// Dense rectangular matrix of rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit ExactMatrix(const std::vector<std::vector<Rational>>& rows) {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows[0].size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const {
        return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
    }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Sparse integer row in increasing column order.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

/// Scales a rational row to a primitive integer row (content 1, sign kept).
inline SparseRow to_integer_row(const std::vector<std::pair<std::size_t, Rational>>& entries) {
    Integer lcm = 1;
    for (const auto& [c, q] : entries) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    SparseRow out;
    Integer g = 0;
    for (const auto& [c, q] : entries) {
        if (q == 0) continue;
        Integer v = q.get_num() * (lcm / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.emplace_back(c, std::move(v));
    }
    if (g > 1) {
        for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/// Incremental fraction-free row echelon form over the integers.
///
/// Rows are stored keyed by pivot column, each reduced to content 1.
class RowEchelon {
public:
    /// Inserts a row; returns true when it increased the rank.
    bool insert(SparseRow r) {
        while (!r.empty()) {
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end()) {
                make_primitive(r);
                pivots_.emplace(r.front().first, std::move(r));
                return true;
            }
            r = eliminate(r, it->second);
        }
        return false;
    }

    bool insert(const std::vector<Rational>& dense) {
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (std::size_t j = 0; j < dense.size(); ++j) {
            if (dense[j] != 0) entries.emplace_back(j, dense[j]);
        }
        return insert(to_integer_row(entries));
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::map<std::size_t, SparseRow>& pivot_rows() const { return pivots_; }

    /// Basis of {x : R x = 0} for the stored rows, over ncols unknowns. Each
    /// vector is primitive integral with its first nonzero entry positive.
    std::vector<std::vector<Rational>> nullspace(std::size_t ncols) const {
        std::vector<std::size_t> free_cols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (!pivots_.count(j)) free_cols.push_back(j);
        }
        std::vector<std::vector<Rational>> basis;
        for (std::size_t f : free_cols) {
            std::vector<Rational> x(ncols);
            x[f] = 1;
            for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
                const auto& row = it->second;
                Rational s = 0;
                for (std::size_t k = 1; k < row.size(); ++k) {
                    if (x[row[k].first] != 0) s += Rational(row[k].second) * x[row[k].first];
                }
                x[it->first] = -s / Rational(row.front().second);
            }
            basis.push_back(normalize_primitive(std::move(x)));
        }
        return basis;
    }

    /// Primitive integral rescaling with first nonzero entry positive.
    static std::vector<Rational> normalize_primitive(std::vector<Rational> x) {
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] != 0) entries.emplace_back(j, x[j]);
        }
        SparseRow r = to_integer_row(entries);
        std::vector<Rational> out(x.size());
        const bool flip = !r.empty() && r.front().second < 0;
        for (auto& [c, v] : r) out[c] = Rational(flip ? Integer(-v) : v);
        return out;
    }

private:
    std::map<std::size_t, SparseRow> pivots_;

    static void make_primitive(SparseRow& r) {
        Integer g = 0;
        for (const auto& e : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g > 1) {
            for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
        }
    }

    /// p.lead * r - r.lead * p, then divided by content.
    static SparseRow eliminate(const SparseRow& r, const SparseRow& p) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), p.front().second.get_mpz_t());
        const Integer fr = p.front().second / g;
        const Integer fp = r.front().second / g;
        SparseRow out;
        out.reserve(r.size() + p.size());
        std::size_t i = 1, j = 1;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                out.emplace_back(r[i].first, fr * r[i].second);
                ++i;
            } else if (i == r.size() || p[j].first < r[i].first) {
                out.emplace_back(p[j].first, -fp * p[j].second);
                ++j;
            } else {
                Integer v = fr * r[i].second - fp * p[j].second;
                if (v != 0) out.emplace_back(r[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        make_primitive(out);
        return out;
    }
};

inline std::size_t exact_rank(const ExactMatrix& m) {
    RowEchelon e;
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    return e.rank();
}

inline std::vector<std::vector<Rational>> nullspace(const ExactMatrix& m) {
    RowEchelon e;
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    return e.nullspace(m.cols());
}

/// Bareiss fraction-free determinant after clearing denominators row-wise.
inline Rational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale /= Rational(lcm);
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return Rational(a[n - 1][n - 1]) * scale * sign;
}

}  // namespace weyl_e8
