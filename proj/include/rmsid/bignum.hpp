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

#ifndef RMSID_BIGNUM_HPP
#define RMSID_BIGNUM_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rmsid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt big_pow(std::uint64_t base, std::uint64_t exponent);
Rational rational_pow(const Rational& base, std::uint64_t exponent);

/// log2 of a positive integer, accurate to double precision even when the
/// value itself is far outside the double range.
double log2_big(const BigInt& value);
double log2_rational(const Rational& value);
double to_double(const Rational& value);

/// "num/den" (or "num" when the denominator is 1).
std::string to_string(const Rational& value);

/// Parses "a/b", an integer, or a plain decimal such as "0.125" exactly.
Rational parse_rational(const std::string& text);

}  // namespace rmsid

#endif
