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

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace weyl_e8 {

/// Exact rational scalar. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator; values built from raw parts go through
/// make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// n (n-1) ... (n-k+1); zero when k > n.
inline Integer falling_factorial(long n, long k) {
    if (k < 0) throw std::domain_error("negative falling factorial order");
    if (k > n) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline Rational pow(const Rational& x, long e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("zero to a negative power");
        return pow(Rational(1) / x, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

/// Bernoulli numbers with B_1 = -1/2, from the recurrence
/// sum_{j<=n} C(n+1, j) B_j = 0. Cached; the cache is guarded so concurrent
/// readers always see a complete prefix.
inline Rational bernoulli(unsigned n) {
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard lock(mutex);
    while (cache.size() <= n) {
        const unsigned m = static_cast<unsigned>(cache.size());
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

/// Converts a rational to T (exact for Rational, via double otherwise).
template <class T>
T scalar_to(const Rational& c) {
    if constexpr (std::is_same_v<T, Rational>) {
        return c;
    } else {
        return T(c.get_d());
    }
}

/// x^e by repeated squaring; negative e inverts.
template <class T>
T int_pow(const T& x, int e) {
    if (e < 0) return T(1) / int_pow(x, -e);
    T r(1), b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return r;
}

namespace detail {

inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

}  // namespace weyl_e8
