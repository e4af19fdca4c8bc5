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

#include <weyl_e8/analytic_eval.hpp>
#include <weyl_e8/generator_catalog.hpp>
#include <weyl_e8/identities.hpp>
#include <weyl_e8/semiinvariants.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace weyl_e8 {

struct SuiteReport {
    std::string suite;
    std::string anchor;
    std::uint64_t seed = 0;
    bool pass = true;
    nlohmann::json items = nlohmann::json::array();
};

inline nlohmann::json to_json(const SuiteReport& r) {
    return {{"suite", r.suite}, {"anchor", r.anchor}, {"seed", r.seed}, {"pass", r.pass}, {"items", r.items}};
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identities", "semiinvariance", "roberts", "equivariance", "numeric"};
    return names;
}

namespace detail {

/// Runs fn(i) for i < n on a small thread pool; results keep index order.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn, unsigned threads = 0) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<R> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
    };
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return out;
}

inline std::vector<GeneratorLabel> all_labels(const Catalog& catalog) {
    std::vector<GeneratorLabel> labels;
    for (const auto& r : catalog.recipes()) labels.push_back(r.label);
    return labels;
}

}  // namespace detail

inline SuiteReport identities_suite(std::uint64_t seed, int jacobian_points = 3) {
    SuiteReport r{"identities", "exact identities between frame coefficients and modular forms", seed, true, {}};
    for (const auto& id : identity_ids()) {
        const IdentityReport rep = verify_identity(id, seed, jacobian_points);
        r.pass = r.pass && rep.pass;
        r.items.push_back(to_json(rep));
    }
    return r;
}

/// Unipotent and diagonal axioms for the source of every generator.
inline SuiteReport semiinvariance_suite(std::uint64_t seed, int trials = 5, Catalog& catalog = Catalog::instance()) {
    SuiteReport r{"semiinvariance", "s(exp(kappa D) alpha) = s, s(lambda-scaled alpha) = lambda^omega s", seed, true, {}};
    catalog.build_all();
    const auto labels = detail::all_labels(catalog);
    const auto results = detail::parallel_map(labels.size(), [&](std::size_t i) {
        const auto checks = check_semiinvariance(source(*catalog.build(labels[i])), trials, seed + i);
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& c : checks) {
            if (!c.pass) failures.push_back(to_json(c));
        }
        return nlohmann::json{{"label", labels[i].str()}, {"pass", failures.empty()}, {"failures", failures}};
    });
    for (const auto& item : results) {
        r.pass = r.pass && item.at("pass").get<bool>();
        r.items.push_back(item);
    }
    return r;
}

/// roberts_lift(source(c)) = c for every generator, plus source multiplicativity on random pairs.
inline SuiteReport roberts_suite(std::uint64_t seed, int pairs = 50, Catalog& catalog = Catalog::instance()) {
    SuiteReport r{"roberts", "roberts_lift(source(c)) = c, source(c1 c2) = source(c1) source(c2)", seed, true, {}};
    catalog.build_all();
    const auto labels = detail::all_labels(catalog);
    const auto results = detail::parallel_map(labels.size(), [&](std::size_t i) {
        const Covariant& c = *catalog.build(labels[i]);
        const Semiinvariant s = source(c);
        const Covariant lifted = roberts_lift(s);
        const bool ok = lifted == c && source(lifted).poly == s.poly;
        return nlohmann::json{{"check", "roundtrip"}, {"label", labels[i].str()}, {"pass", ok}};
    });
    for (const auto& item : results) {
        r.pass = r.pass && item.at("pass").get<bool>();
        r.items.push_back(item);
    }
    // Pairs of small generators keep the products cheap.
    std::vector<GeneratorLabel> small;
    for (const auto& l : labels) {
        if (l.d_a + l.d_b <= 6) small.push_back(l);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    std::vector<std::pair<GeneratorLabel, GeneratorLabel>> chosen;
    for (int k = 0; k < pairs; ++k) chosen.emplace_back(small[pick(rng)], small[pick(rng)]);
    const auto products = detail::parallel_map(chosen.size(), [&](std::size_t k) {
        const Covariant& c1 = *catalog.build(chosen[k].first);
        const Covariant& c2 = *catalog.build(chosen[k].second);
        const bool ok = source(c1 * c2).poly == source(c1).poly * source(c2).poly;
        return nlohmann::json{
            {"check", "multiplicative"}, {"label", chosen[k].first.str() + "*" + chosen[k].second.str()}, {"pass", ok}};
    });
    for (const auto& item : products) {
        r.pass = r.pass && item.at("pass").get<bool>();
        r.items.push_back(item);
    }
    return r;
}

/// Psi(alpha'; u, v) = Psi(alpha; T(u, v)) for every generator at random unimodular T.
inline SuiteReport equivariance_suite(std::uint64_t seed, int matrices = 5, Catalog& catalog = Catalog::instance()) {
    SuiteReport r{"equivariance", "Psi(alpha'; u, v) = Psi(alpha; T(u, v)) for T in SL2(Q)", seed, true, {}};
    RationalSampler sampler(seed);
    std::vector<Matrix2> ts;
    nlohmann::json shown = nlohmann::json::array();
    for (int k = 0; k < matrices; ++k) {
        ts.push_back(sampler.unimodular());
        nlohmann::json m = nlohmann::json::array();
        for (const auto& row : ts.back()) m.push_back({to_string(row[0]), to_string(row[1])});
        shown.push_back(m);
    }
    catalog.build_all();
    const auto labels = detail::all_labels(catalog);
    const auto results = detail::parallel_map(labels.size(), [&](std::size_t i) {
        const Covariant& c = *catalog.build(labels[i]);
        int failed = 0;
        for (const auto& t : ts) failed += is_equivariant(c, t) ? 0 : 1;
        return nlohmann::json{{"label", labels[i].str()}, {"pass", failed == 0}, {"failed_matrices", failed}};
    });
    r.items.push_back({{"matrices", shown}});
    for (const auto& item : results) {
        r.pass = r.pass && item.at("pass").get<bool>();
        r.items.push_back(item);
    }
    return r;
}

inline SuiteReport numeric_suite_report(const NumericContext& ctx, std::uint64_t seed) {
    SuiteReport r{"numeric", "theta-function realizations of A_m, B_m and the frame relations", seed, true, {}};
    for (const auto& c : numeric_suite(ctx, seed)) {
        r.pass = r.pass && c.pass;
        r.items.push_back(to_json(c));
    }
    return r;
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, const NumericContext& ctx = default_context()) {
    if (name == "identities") return identities_suite(seed);
    if (name == "semiinvariance") return semiinvariance_suite(seed);
    if (name == "roberts") return roberts_suite(seed);
    if (name == "equivariance") return equivariance_suite(seed);
    if (name == "numeric") return numeric_suite_report(ctx, seed);
    throw std::invalid_argument("unknown suite " + name);
}

}  // namespace weyl_e8
