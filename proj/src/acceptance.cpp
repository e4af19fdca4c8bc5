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

// Acceptance run: one PASS/FAIL line per criterion, exit 0 only if all pass.

#include <weyl_e8/analytic_eval.hpp>
#include <weyl_e8/basis_algorithm.hpp>
#include <weyl_e8/generator_catalog.hpp>
#include <weyl_e8/suites.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace weyl_e8;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

constexpr std::uint64_t kSeed = 20240601;

Polynomial v(const char* name) { return var(name); }

Outcome catalog_criterion() {
    Catalog& c = Catalog::instance();
    c.build_all();
    int nonzero = 0;
    for (const auto& r : c.recipes()) nonzero += c.build(r.label)->is_zero() ? 0 : 1;
    const CatalogTable t = catalog_table();
    const std::vector<int> expected{60, 68, 38, 17, 8, 2, 1};
    bool totals = t.total() == 194;
    std::ostringstream cols;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const int got = t.column_total(2 * static_cast<int>(i));
        totals = totals && got == expected[i];
        cols << (i ? "," : "") << got;
    }
    // Expected row totals for m = 0..45.
    const std::vector<int> rows{2, 1, 3, 5, 5, 5, 7, 9, 8, 8, 8, 13, 9, 9, 9, 15, 7, 10, 7, 8, 4, 9, 3,
                                5, 2, 6, 1, 2, 1, 3, 1, 2, 1, 1, 0, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1};
    bool row_ok = true;
    for (int m = 0; m <= CatalogTable::kMaxIndex; ++m) row_ok = row_ok && t.row_total(m) == rows[m];
    std::ostringstream os;
    os << "recipes=" << c.recipes().size() << " nonzero=" << nonzero << " column totals=" << cols.str()
       << " total=" << t.total() << " rows " << (row_ok ? "match" : "differ");
    return {nonzero == 194 && c.recipes().size() == 194 && totals && row_ok, os.str()};
}

Outcome normalization_criterion() {
    struct Entry {
        GeneratorLabel label;
        Polynomial stated;
        bool exact;
    };
    const std::vector<Entry> entries{
        {{1, 0, 0, 4}, v("a0"), true},
        {{0, 1, 0, 6}, v("b0"), true},
        {{1, 1, 1, 8}, -(v("a0") * v("b1")) / Rational(6), false},
        {{2, 0, 2, 4}, v("a0") * v("a2") / Rational(3), true},
        {{1, 1, 2, 6}, (2 * v("a0") * v("b2") + 5 * v("a2") * v("b0")) / Rational(30), true},
        {{0, 2, 2, 8}, (12 * v("b0") * v("b2") - 5 * v("b1").pow(2)) / Rational(90), true}};
    bool pass = true;
    std::ostringstream os;
    for (const auto& e : entries) {
        const Polynomial got = generator_as_jacobi(e.label).poly;
        // got = scalar * stated for a single rational scalar.
        const Rational scalar = got.terms().front().coeff / e.stated.over(got.alphabet()).terms().front().coeff;
        const bool proportional = scalar != 0 && got == Polynomial(scalar) * e.stated;
        const bool ok = proportional && (!e.exact || scalar == 1);
        pass = pass && ok;
        if (!e.exact) os << e.label.str() << " scalar=" << to_string(scalar) << " ";
        if (!ok) os << e.label.str() << " mismatch ";
    }
    os << "(6 entries)";
    return {pass, os.str()};
}

Outcome report_outcome(const SuiteReport& r) {
    std::size_t failed = 0;
    for (const auto& item : r.items) {
        if (item.contains("pass") && !item.at("pass").get<bool>()) ++failed;
    }
    return {r.pass, r.suite + " items=" + std::to_string(r.items.size()) + " failed=" + std::to_string(failed) +
                        " seed=" + std::to_string(r.seed)};
}

Outcome identities_criterion() { return report_outcome(identities_suite(kSeed, 3)); }

Outcome lb_criterion() {
    const LbTable t = lb_generator_counts(14);
    const std::vector<long> expected{0, 0, 0, 0, 1, 0, 2, 0, 1, 1, 2, 0, 3, 1, 3};
    std::ostringstream os;
    for (std::size_t m = 0; m < t.generators.size(); ++m) os << (m ? "," : "") << t.generators[m];
    const bool first = std::equal(expected.begin(), expected.begin() + 11, t.generators.begin());
    return {t.generators == expected, "d_lb(m<=14)=" + os.str() + (first ? " (m<=10 exact)" : " (m<=10 differs)")};
}

Outcome lower_bound_criterion() {
    std::size_t cells = 0, nonzero_negative = 0, members = 0, bad_members = 0;
    for (int m = 0; m <= 8; ++m) {
        for (int w = -12; w <= 12; w += 2) {
            const BasisResult r = jacobi_basis(w - 4 * m, m);
            ++cells;
            if (w < 0 && r.dimension() != 0) ++nonzero_negative;
            for (const auto& b : r.basis) {
                ++members;
                if (b.grade.order < 0 || !is_jacobi_form(b.poly)) ++bad_members;
            }
        }
    }
    std::ostringstream os;
    os << "cells=" << cells << " negative-order cells with elements=" << nonzero_negative
       << " basis elements checked=" << members;
    return {nonzero_negative == 0 && bad_members == 0, os.str()};
}

Outcome roberts_criterion() { return report_outcome(roberts_suite(kSeed, 50)); }

Outcome equivariance_criterion() {
    const Outcome eq = report_outcome(equivariance_suite(kSeed, 5));
    const Outcome semi = report_outcome(semiinvariance_suite(kSeed, 5));
    return {eq.pass && semi.pass, eq.detail + "; " + semi.detail};
}

Outcome numeric_criterion() {
    NumericContext ctx = default_context();
    ctx.order = 24;
    const SuiteReport r = numeric_suite_report(ctx, kSeed);
    std::ostringstream os;
    os << "tau=1.2i N=24";
    for (const auto& item : r.items) {
        os << " " << item.at("id").get<std::string>() << "=" << item.at("residual").get<double>();
    }
    return {r.pass, os.str()};
}

Outcome cross_ring_criterion() {
    const auto cells = cross_ring_check(8, 8);
    std::size_t failed = 0;
    std::ostringstream bad;
    for (const auto& c : cells) {
        if (!c.pass()) {
            ++failed;
            bad << " (" << c.index << "," << c.order << ")";
        }
    }
    return {failed == 0, "cells=" + std::to_string(cells.size()) + " failed=" + std::to_string(failed) + bad.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"generator catalog and count table", catalog_criterion},
        {"generator normalizations", normalization_criterion},
        {"identity suite", identities_criterion},
        {"order-zero generator counts", lb_criterion},
        {"no forms of negative order", lower_bound_criterion},
        {"Roberts roundtrip and multiplicativity", roberts_criterion},
        {"equivariance and semiinvariance", equivariance_criterion},
        {"numeric suite", numeric_criterion},
        {"cross-ring consistency", cross_ring_criterion}};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << ": "
                  << o.detail << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::defaultfloat
                  << std::endl;
    }
    return all ? 0 : 1;
}
