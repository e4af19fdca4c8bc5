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
#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weyl_e8 {

/// Parsed arithmetic expression over rationals and named symbols.
struct Expr {
    enum class Op { number, symbol, add, sub, mul, div, neg, pow };
    Op op;
    Rational number;
    std::string symbol;
    int exponent = 0;
    std::shared_ptr<const Expr> lhs, rhs;

    /// Evaluates with an algebra providing constant, symbol, add, sub, mul,
    /// div, neg and pow.
    template <class Algebra>
    auto evaluate(Algebra& alg) const -> decltype(alg.constant(Rational())) {
        switch (op) {
            case Op::number: return alg.constant(number);
            case Op::symbol: return alg.symbol(symbol);
            case Op::add: return alg.add(lhs->evaluate(alg), rhs->evaluate(alg));
            case Op::sub: return alg.sub(lhs->evaluate(alg), rhs->evaluate(alg));
            case Op::mul: return alg.mul(lhs->evaluate(alg), rhs->evaluate(alg));
            case Op::div: return alg.div(lhs->evaluate(alg), rhs->evaluate(alg));
            case Op::neg: return alg.neg(lhs->evaluate(alg));
            case Op::pow: return alg.pow(lhs->evaluate(alg), exponent);
        }
        throw std::logic_error("bad expression node");
    }
};

using ExprPtr = std::shared_ptr<const Expr>;

class ExpressionParser {
public:
    static ExprPtr parse(std::string_view text) {
        ExpressionParser p(text);
        ExprPtr e = p.sum();
        p.skip();
        if (p.pos_ != p.s_.size()) p.fail("trailing input");
        return e;
    }

private:
    explicit ExpressionParser(std::string_view s) : s_(s) {}

    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression parse error (" + what + ") at offset " + std::to_string(pos_));
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
    static ExprPtr node(Expr::Op op, ExprPtr l, ExprPtr r = nullptr) {
        auto e = std::make_shared<Expr>();
        e->op = op;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    ExprPtr sum() {
        ExprPtr e = product();
        for (;;) {
            if (accept('+')) {
                e = node(Expr::Op::add, e, product());
            } else if (accept('-')) {
                e = node(Expr::Op::sub, e, product());
            } else {
                return e;
            }
        }
    }

    ExprPtr product() {
        ExprPtr e = unary();
        for (;;) {
            if (accept('*')) {
                e = node(Expr::Op::mul, e, unary());
            } else if (accept('/')) {
                e = node(Expr::Op::div, e, unary());
            } else {
                return e;
            }
        }
    }

    ExprPtr unary() {
        if (accept('-')) return node(Expr::Op::neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (!accept('^')) return base;
        bool negative = accept('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        auto e = node(Expr::Op::pow, base);
        std::const_pointer_cast<Expr>(e)->exponent =
            (negative ? -1 : 1) * std::stoi(std::string(s_.substr(start, pos_ - start)));
        return e;
    }

    ExprPtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::number;
            e->number = Rational(Integer(std::string(s_.substr(start, pos_ - start))));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::symbol;
            e->symbol = std::string(s_.substr(start, pos_ - start));
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

/// Ordered "name=expression" definitions.
using Definitions = std::vector<std::pair<std::string, ExprPtr>>;

inline Definitions parse_definitions(std::string_view text) {
    Definitions out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("definition lacks '=': " + line);
        std::string name = line.substr(0, eq);
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        out.emplace_back(name, ExpressionParser::parse(line.substr(eq + 1)));
    }
    return out;
}

/// Algebra over a field-like value type with named bindings.
template <class T>
struct ValueAlgebra {
    std::map<std::string, T> bindings;

    T constant(const Rational& r) const { return scalar_to<T>(r); }
    T symbol(const std::string& name) const {
        auto it = bindings.find(name);
        if (it == bindings.end()) throw std::out_of_range("unbound symbol " + name);
        return it->second;
    }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T div(const T& a, const T& b) const { return a / b; }
    T neg(const T& a) const { return -a; }
    T pow(const T& a, int e) const { return int_pow(a, e); }
};

inline ExprPtr find_definition(const Definitions& defs, std::string_view name) {
    for (const auto& [n, e] : defs) {
        if (n == name) return e;
    }
    throw std::out_of_range("no definition for " + std::string(name));
}

}  // namespace weyl_e8
