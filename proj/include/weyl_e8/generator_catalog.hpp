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
#include <weyl_e8/catalog_recipes.hpp>
#include <weyl_e8/jacobi_ring.hpp>
#include <weyl_e8/semiinvariants.hpp>

#include <atomic>
#include <cctype>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

namespace weyl_e8 {

/// <d_a, d_b>_{m, order[, n]}; n = 0 when the label is unique.
struct GeneratorLabel {
    int d_a = 0, d_b = 0, index = 0, order = 0, n = 0;

    int weight() const { return order - 4 * index; }
    bool grade_consistent() const { return order == 4 * d_a + 6 * d_b - 2 * index; }

    std::string str() const {
        std::ostringstream s;
        s << "G(" << d_a << "," << d_b << "," << index << "," << order;
        if (n) s << "," << n;
        s << ")";
        return s.str();
    }

    static GeneratorLabel parse(std::string_view text) {
        std::string s(text);
        s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
        if (s.size() < 4 || s.rfind("G(", 0) != 0 || s.back() != ')') {
            throw std::invalid_argument("malformed generator label '" + std::string(text) + "'");
        }
        std::vector<int> parts;
        std::stringstream in(s.substr(2, s.size() - 3));
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != item.size() || item.empty()) {
                throw std::invalid_argument("malformed generator label '" + std::string(text) + "'");
            }
            parts.push_back(value);
        }
        if (parts.size() != 4 && parts.size() != 5) {
            throw std::invalid_argument("malformed generator label '" + std::string(text) + "'");
        }
        return {parts[0], parts[1], parts[2], parts[3], parts.size() == 5 ? parts[4] : 0};
    }

    friend auto operator<=>(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// Recipe expression tree.
struct RecipeNode {
    enum class Kind { quartic, sextic, generator, transvectant, product, power };
    Kind kind;
    GeneratorLabel label;                       // generator
    std::vector<std::shared_ptr<RecipeNode>> children;  // transvectant (2), product (>=2), power (1)
    int parameter = 0;                          // transvectant index or exponent

    std::string str() const {
        switch (kind) {
            case Kind::quartic: return "f";
            case Kind::sextic: return "g";
            case Kind::generator: return label.str();
            case Kind::transvectant:
                return "T(" + children[0]->str() + ", " + children[1]->str() + ", " + std::to_string(parameter) + ")";
            case Kind::product: {
                std::string s;
                for (const auto& c : children) s += (s.empty() ? "" : "*") + c->str();
                return s;
            }
            case Kind::power: {
                const auto& c = children[0];
                const bool atomic = c->kind != Kind::product;
                return (atomic ? c->str() : "(" + c->str() + ")") + "^" + std::to_string(parameter);
            }
        }
        return {};
    }
};

struct GeneratorRecipe {
    GeneratorLabel label;
    std::string text;
    std::shared_ptr<RecipeNode> tree;
};

namespace detail {

class RecipeParser {
public:
    explicit RecipeParser(std::string_view text) : s_(text) {}

    std::shared_ptr<RecipeNode> parse_expression_to_end() {
        auto node = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return node;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("recipe parse error (" + what + ") at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    std::shared_ptr<RecipeNode> expr() {
        auto first = factor();
        if (!accept('*')) return first;
        auto node = std::make_shared<RecipeNode>(RecipeNode{RecipeNode::Kind::product, {}, {first}, 0});
        do node->children.push_back(factor()); while (accept('*'));
        return node;
    }

    std::shared_ptr<RecipeNode> factor() {
        auto base = atom();
        if (!accept('^')) return base;
        return std::make_shared<RecipeNode>(RecipeNode{RecipeNode::Kind::power, {}, {base}, integer()});
    }

    std::shared_ptr<RecipeNode> atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'f' || c == 'g') {
            ++pos_;
            return std::make_shared<RecipeNode>(
                RecipeNode{c == 'f' ? RecipeNode::Kind::quartic : RecipeNode::Kind::sextic, {}, {}, 0});
        }
        if (c == 'G') {
            const std::size_t close = s_.find(')', pos_);
            if (close == std::string_view::npos) fail("unterminated label");
            auto label = GeneratorLabel::parse(s_.substr(pos_, close - pos_ + 1));
            pos_ = close + 1;
            return std::make_shared<RecipeNode>(RecipeNode{RecipeNode::Kind::generator, label, {}, 0});
        }
        if (c == 'T') {
            ++pos_;
            expect('(');
            auto lhs = expr();
            expect(',');
            auto rhs = expr();
            expect(',');
            const int i = integer();
            expect(')');
            return std::make_shared<RecipeNode>(RecipeNode{RecipeNode::Kind::transvectant, {}, {lhs, rhs}, i});
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace detail

/// Parses recipe lines and validates labels and references.
inline std::vector<GeneratorRecipe> parse_recipes(std::string_view text) {
    std::vector<GeneratorRecipe> out;
    std::map<GeneratorLabel, std::size_t> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("recipe line lacks '=': " + line);
        GeneratorRecipe r;
        r.label = GeneratorLabel::parse(line.substr(0, eq));
        r.text = line.substr(eq + 1);
        r.text.erase(0, r.text.find_first_not_of(' '));
        r.tree = detail::RecipeParser(r.text).parse_expression_to_end();
        if (!r.label.grade_consistent()) throw std::invalid_argument("label violates order = 4da + 6db - 2m: " + r.label.str());
        if (seen.count(r.label)) throw std::invalid_argument("duplicate label " + r.label.str());
        std::vector<const RecipeNode*> stack{r.tree.get()};
        while (!stack.empty()) {
            const RecipeNode* node = stack.back();
            stack.pop_back();
            if (node->kind == RecipeNode::Kind::generator && !seen.count(node->label)) {
                throw std::invalid_argument(r.label.str() + " references undefined " + node->label.str());
            }
            for (const auto& c : node->children) stack.push_back(c.get());
        }
        seen.emplace(r.label, out.size());
        out.push_back(std::move(r));
    }
    return out;
}

inline bool recipes_checksum_ok() { return detail::fnv1a(kCatalogRecipes) == kCatalogRecipesChecksum; }

/// Table of generator counts by index m and order.
struct CatalogTable {
    static constexpr int kMaxIndex = 45;
    static constexpr int kOrders[] = {0, 2, 4, 6, 8, 10, 12};

    std::map<std::pair<int, int>, int> counts;  // (m, order) -> count

    int count(int m, int order) const {
        auto it = counts.find({m, order});
        return it == counts.end() ? 0 : it->second;
    }
    int row_total(int m) const {
        int s = 0;
        for (int w : kOrders) s += count(m, w);
        return s;
    }
    int column_total(int order) const {
        int s = 0;
        for (const auto& [key, c] : counts) {
            if (key.second == order) s += c;
        }
        return s;
    }
    int total() const {
        int s = 0;
        for (const auto& [key, c] : counts) s += c;
        return s;
    }

    /// Rows m = 0..45, "-" for empty cells, closing "Tot." row.
    std::string to_csv() const {
        std::ostringstream out;
        out << "m\\omega";
        for (int w : kOrders) out << "," << w;
        out << ",#\n";
        for (int m = 0; m <= kMaxIndex; ++m) {
            out << m;
            for (int w : kOrders) {
                const int c = count(m, w);
                out << ",";
                if (c) out << c; else out << "-";
            }
            out << "," << row_total(m) << "\n";
        }
        out << "Tot.";
        for (int w : kOrders) out << "," << column_total(w);
        out << "," << total() << "\n";
        return out.str();
    }
};

/// Memoized evaluation of the embedded generator recipes.
///
/// Lookups and insertions are serialized by a mutex; evaluation runs
/// outside the lock, so two threads may build the same label and the
/// second insertion is discarded.
class Catalog {
public:
    explicit Catalog(std::string_view text = kCatalogRecipes) : recipes_(parse_recipes(text)) {
        for (std::size_t i = 0; i < recipes_.size(); ++i) index_.emplace(recipes_[i].label, i);
    }

    static Catalog& instance() {
        static Catalog catalog;
        return catalog;
    }

    const std::vector<GeneratorRecipe>& recipes() const { return recipes_; }

    const GeneratorRecipe& recipe(const GeneratorLabel& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw std::out_of_range("no generator " + label.str());
        return recipes_[it->second];
    }

    /// Evaluates a label; errors on zero results and grade mismatches.
    std::shared_ptr<const Covariant> build(const GeneratorLabel& label) {
        {
            std::lock_guard lock(mutex_);
            auto it = cache_.find(label);
            if (it != cache_.end()) return it->second;
        }
        const GeneratorRecipe& r = recipe(label);
        auto value = std::make_shared<const Covariant>(evaluate(*r.tree));
        if (value->is_zero()) throw std::runtime_error(label.str() + " evaluates to zero");
        const CovariantGrade g = covariant_grades(*value);
        if (g.d_alpha != label.d_a || g.d_beta != label.d_b || g.order != label.order) {
            throw std::runtime_error(label.str() + " has computed grade (" + std::to_string(g.d_alpha) + "," +
                                     std::to_string(g.d_beta) + "," + std::to_string(g.order) + ")");
        }
        std::lock_guard lock(mutex_);
        return cache_.emplace(label, std::move(value)).first->second;
    }

    /// Builds every generator using up to `threads` workers.
    void build_all(unsigned threads = std::max(1u, std::thread::hardware_concurrency())) {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < recipes_.size(); i = next++) {
                try {
                    build(recipes_[i].label);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        };
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (error) std::rethrow_exception(error);
    }

    std::size_t cached() const {
        std::lock_guard lock(mutex_);
        return cache_.size();
    }

    Covariant evaluate(const RecipeNode& node) {
        switch (node.kind) {
            case RecipeNode::Kind::quartic: return Covariant::quartic();
            case RecipeNode::Kind::sextic: return Covariant::sextic();
            case RecipeNode::Kind::generator: return *build(node.label);
            case RecipeNode::Kind::transvectant:
                return transvectant(evaluate(*node.children[0]), evaluate(*node.children[1]), node.parameter);
            case RecipeNode::Kind::product: {
                Covariant acc = evaluate(*node.children[0]);
                for (std::size_t i = 1; i < node.children.size(); ++i) acc = acc * evaluate(*node.children[i]);
                return acc;
            }
            case RecipeNode::Kind::power: return evaluate(*node.children[0]).pow(node.parameter);
        }
        throw std::logic_error("unknown recipe node");
    }

private:
    std::vector<GeneratorRecipe> recipes_;
    std::map<GeneratorLabel, std::size_t> index_;
    mutable std::mutex mutex_;
    std::map<GeneratorLabel, std::shared_ptr<const Covariant>> cache_;
};

inline Covariant build_generator(const GeneratorLabel& label) { return *Catalog::instance().build(label); }

/// Counts of nonzero generators by (index, order); builds all of them.
inline CatalogTable catalog_table(Catalog& catalog = Catalog::instance()) {
    catalog.build_all();
    CatalogTable t;
    for (const auto& r : catalog.recipes()) {
        if (catalog.build(r.label)->is_zero()) throw std::runtime_error(r.label.str() + " evaluates to zero");
        ++t.counts[{r.label.index, r.label.order}];
    }
    return t;
}

/// Source with alpha -> a (a1 = 0), beta -> b; checked for membership.
inline JacobiPolynomial generator_as_jacobi(const GeneratorLabel& label, Catalog& catalog = Catalog::instance()) {
    JacobiPolynomial j = psi_J_inverse(source(*catalog.build(label)));
    if (j.poly.is_zero() || !is_jacobi_form(j.poly)) throw std::runtime_error(label.str() + " fails the membership test");
    if (j.grade.weight != label.order - 4 * label.index || j.grade.index != label.index) {
        throw std::runtime_error(label.str() + " has inconsistent Jacobi grades");
    }
    return j;
}

}  // namespace weyl_e8
