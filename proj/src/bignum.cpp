/*
   Copyright 2026 The rmsid Authors

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

#include "rmsid/bignum.hpp"

#include <cmath>
#include <string>

#include "rmsid/error.hpp"

namespace rmsid {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) here
    }
    return result;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

Rational rational_pow(const Rational& base, std::uint64_t exponent) {
    Rational result = 1;
    Rational b = base;
    while (exponent) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

double log2_big(const BigInt& value) {
    if (value <= 0) throw Error(ErrorKind::invalid_parameter, "log2 of a non-positive integer");
    const std::size_t msb = boost::multiprecision::msb(value);
    if (msb < 53) return std::log2(value.convert_to<double>());
    // Keep the top 53 bits; the discarded tail changes log2 by < 2^-52.
    const std::size_t shift = msb - 52;
    const BigInt top = value >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double log2_rational(const Rational& value) {
    if (value <= 0) throw Error(ErrorKind::invalid_parameter, "log2 of a non-positive rational");
    return log2_big(boost::multiprecision::numerator(value)) -
           log2_big(boost::multiprecision::denominator(value));
}

double to_double(const Rational& value) {
    if (value == 0) return 0.0;
    const double l = log2_rational(value >= 0 ? Rational(value) : Rational(-value));
    if (l > -1000.0 && l < 1000.0) return value.convert_to<double>();
    const double magnitude = std::exp2(l);
    return value < 0 ? -magnitude : magnitude;
}

std::string to_string(const Rational& value) {
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    auto fail = [&] { return Error(ErrorKind::parse_error, "not a rational number: '" + text + "'"); };
    if (text.empty()) throw fail();
    try {
        if (const auto slash = text.find('/'); slash != std::string::npos) {
            const BigInt num(text.substr(0, slash));
            const BigInt den(text.substr(slash + 1));
            if (den == 0) throw fail();
            return Rational(num, den);
        }
        if (const auto dot = text.find('.'); dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            const std::size_t decimals = text.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+") throw fail();
            return Rational(BigInt(digits), big_pow(10, decimals));
        }
        return Rational(BigInt(text));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw fail();
    }
}

}  // namespace rmsid
