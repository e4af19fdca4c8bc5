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
#include <weyl_e8/basis_algorithm.hpp>
#include <weyl_e8/generator_catalog.hpp>
#include <weyl_e8/suites.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace weyl_e8::cli {

enum ExitCode { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parses "1.5", "0.07i", "-i", "0.03+0.02i", "1e-3-2e-2i".
inline Complex parse_complex(std::string s) {
    std::erase(s, ' ');
    if (s.empty()) throw UsageError("empty complex number");
    auto real_part = [&](const std::string& t) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw UsageError("bad number '" + t + "'");
        }
        if (used != t.size()) throw UsageError("bad number '" + t + "'");
        return v;
    };
    if (s.back() != 'i') return real_part(s);
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re = split == std::string::npos ? "" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : real_part(re), real_part(im)};
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

/// Removes wall-clock fields so equal inputs give byte-identical JSON.
inline void strip_timings(nlohmann::json& j) {
    if (j.is_object()) {
        j.erase("seconds");
        for (auto& [k, v] : j.items()) strip_timings(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_timings(v);
    }
}

inline std::string format_complex(Complex c) {
    std::ostringstream os;
    os << std::setprecision(17) << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    return os.str();
}

inline std::string lb_csv(const LbTable& t) {
    std::ostringstream os;
    os << "m";
    for (std::size_t m = 0; m < t.generators.size(); ++m) os << "," << m;
    os << "\nd_lb";
    for (long d : t.generators) os << "," << d;
    os << "\n";
    return os.str();
}

struct Options {
    std::optional<int> weight, index;
    int max_index = 10;
    std::string json_path, csv_path;
    std::uint64_t seed = 1;
    std::string tau = "0,1.2";
    std::string z;
    int order = 24;
    std::optional<double> tol;
    std::string suite = "all";
    std::vector<std::string> forms;
};

inline NumericContext numeric_context(const Options& o) {
    NumericContext ctx = default_context();
    const auto t = split_commas(o.tau);
    if (t.size() != 2) throw UsageError("--tau expects RE,IM");
    ctx.tau = {parse_complex(t[0]).real(), parse_complex(t[1]).real()};
    if (!o.z.empty()) {
        const auto parts = split_commas(o.z);
        if (parts.size() != 8) throw UsageError("--z expects 8 comma-separated complex numbers");
        for (int j = 0; j < 8; ++j) ctx.z[j] = parse_complex(parts[j]);
    }
    ctx.order = o.order;
    if (o.tol) ctx.tol = *o.tol;
    try {
        ctx.validate();
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    return ctx;
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    int generators() {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : Catalog::instance().recipes()) {
            if (o_.index && r.label.index != *o_.index) continue;
            if (o_.weight && r.label.weight() != *o_.weight) continue;
            arr.push_back({{"label", r.label.str()},
                           {"recipe", r.tree->str()},
                           {"d_a", r.label.d_a},
                           {"d_b", r.label.d_b},
                           {"index", r.label.index},
                           {"order", r.label.order},
                           {"weight", r.label.weight()}});
            out_ << r.label.str() << " = " << r.tree->str() << "\n";
        }
        emit_json(arr);
        return kSuccess;
    }

    int table2() {
        const CatalogTable t = catalog_table();
        const std::string csv = t.to_csv();
        if (!write_csv(csv)) out_ << csv;
        nlohmann::json rows = nlohmann::json::array();
        for (int m = 0; m <= CatalogTable::kMaxIndex; ++m) {
            nlohmann::json row{{"index", m}};
            for (int w : CatalogTable::kOrders) row[std::to_string(w)] = t.count(m, w);
            row["total"] = t.row_total(m);
            rows.push_back(row);
        }
        emit_json({{"rows", rows}, {"total", t.total()}});
        return kSuccess;
    }

    int basis() {
        if (!o_.weight || !o_.index) throw UsageError("basis requires --weight and --index");
        const BasisResult r = jacobi_basis(*o_.weight, *o_.index);
        out_ << "weight " << r.weight << " index " << r.index << " dimension " << r.dimension() << "\n";
        for (const auto& b : r.basis) out_ << b.poly << "\n";
        err_ << "seconds " << r.seconds << "\n";
        emit_json(to_json(r));
        return kSuccess;
    }

    int lb_table() {
        if (o_.max_index < 0) throw UsageError("--max-index must be non-negative");
        const LbTable t = lb_generator_counts(o_.max_index);
        const std::string csv = lb_csv(t);
        if (!write_csv(csv)) out_ << csv;
        for (std::size_t m = 0; m < t.seconds.size(); ++m) err_ << "m=" << m << " seconds " << t.seconds[m] << "\n";
        emit_json(to_json(t));
        return kSuccess;
    }

    int verify() {
        std::vector<std::string> names;
        if (o_.suite == "all") {
            names = suite_names();
        } else if (std::find(suite_names().begin(), suite_names().end(), o_.suite) != suite_names().end()) {
            names = {o_.suite};
        } else {
            throw UsageError("unknown suite " + o_.suite);
        }
        const NumericContext ctx = numeric_context(o_);
        bool pass = true;
        nlohmann::json reports = nlohmann::json::array();
        for (const auto& n : names) {
            SuiteReport r = run_suite(n, o_.seed, ctx);
            if (n == "numeric" && o_.tol) {
                r.pass = true;
                for (auto& item : r.items) {
                    item["tol"] = *o_.tol;
                    item["pass"] = item["residual"].get<double>() < *o_.tol;
                    r.pass = r.pass && item["pass"].get<bool>();
                }
            }
            pass = pass && r.pass;
            out_ << (r.pass ? "PASS " : "FAIL ") << r.suite << " (" << r.items.size() << " items, seed " << r.seed
                 << ")\n";
            reports.push_back(to_json(r));
        }
        emit_json({{"seed", o_.seed}, {"pass", pass}, {"suites", reports}});
        return pass ? kSuccess : kVerificationFailure;
    }

    int eval() {
        const NumericContext ctx = numeric_context(o_);
        std::map<std::string, Complex> values;
        try {
            values = evaluate_forms(ctx);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
        std::vector<std::string> names = o_.forms;
        if (names.empty()) {
            for (const auto& [k, v] : values) names.push_back(k);
        }
        nlohmann::json vals = nlohmann::json::object();
        for (const auto& n : names) {
            auto it = values.find(n);
            if (it == values.end()) throw UsageError("unknown form " + n);
            out_ << n << " " << format_complex(it->second) << "\n";
            vals[n] = {it->second.real(), it->second.imag()};
        }
        nlohmann::json z = nlohmann::json::array();
        for (const auto& zj : ctx.z) z.push_back({zj.real(), zj.imag()});
        emit_json({{"tau", {ctx.tau.real(), ctx.tau.imag()}}, {"z", z}, {"order", ctx.order}, {"values", vals}});
        return kSuccess;
    }

private:
    void emit_json(nlohmann::json j) {
        if (o_.json_path.empty()) return;
        strip_timings(j);
        if (o_.json_path == "-") {
            out_ << j.dump(2) << "\n";
            return;
        }
        std::ofstream f(o_.json_path);
        if (!f) throw std::runtime_error("cannot write " + o_.json_path);
        f << j.dump(2) << "\n";
    }

    bool write_csv(const std::string& csv) {
        if (o_.csv_path.empty()) return false;
        if (o_.csv_path == "-") {
            out_ << csv;
            return true;
        }
        std::ofstream f(o_.csv_path);
        if (!f) throw std::runtime_error("cannot write " + o_.csv_path);
        f << csv;
        return true;
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

/// Entry point shared by the executable and the tests.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weak Jacobi forms for E8: generators, bases and verification", "weyl-e8"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--json", o.json_path, "Write JSON report to path (- for stdout)");
        sub->add_option("--seed", o.seed, "Seed for randomized checks");
    };
    auto add_numeric = [&](CLI::App* sub) {
        sub->add_option("--tau", o.tau, "tau as RE,IM")->capture_default_str();
        sub->add_option("--z", o.z, "z as 8 comma-separated complex numbers");
        sub->add_option("--order", o.order, "q-series truncation order")->capture_default_str();
        sub->add_option("--tol", o.tol, "Tolerance override for numeric checks");
    };

    auto* gens = app.add_subcommand("generators", "List the generator labels and recipes");
    gens->add_option("--index", o.index, "Only generators of this index");
    gens->add_option("--weight", o.weight, "Only generators of this weight");
    add_common(gens);

    auto* t2 = app.add_subcommand("table2", "Generator counts by index and order");
    t2->add_option("--csv", o.csv_path, "Write CSV to path (- for stdout)");
    add_common(t2);

    auto* basis = app.add_subcommand("basis", "Basis of weak Jacobi forms of given weight and index");
    basis->add_option("--weight", o.weight, "Weight k")->required();
    basis->add_option("--index", o.index, "Index m")->required();
    add_common(basis);

    auto* lb = app.add_subcommand("lb-table", "Generator counts of the order-zero subring");
    lb->add_option("--max-index", o.max_index, "Largest index")->capture_default_str();
    lb->add_option("--csv", o.csv_path, "Write CSV to path (- for stdout)");
    add_common(lb);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suite, "identities|semiinvariance|roberts|equivariance|numeric|all")
        ->capture_default_str();
    add_common(verify);
    add_numeric(verify);

    auto* ev = app.add_subcommand("eval", "Evaluate forms numerically");
    ev->add_option("forms", o.forms, "Form names (default: all)");
    add_common(ev);
    add_numeric(ev);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return kUsageError;
    }

    Runner runner(o, out, err);
    try {
        if (*gens) return runner.generators();
        if (*t2) return runner.table2();
        if (*basis) return runner.basis();
        if (*lb) return runner.lb_table();
        if (*verify) return runner.verify();
        if (*ev) return runner.eval();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace weyl_e8::cli
