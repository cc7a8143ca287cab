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

#ifndef RMSID_POLYNOMIAL_HPP
#define RMSID_POLYNOMIAL_HPP

#include <cstdint>
#include <vector>

#include "rmsid/ff.hpp"

// Dense univariate polynomials over a Field, coefficients from x^0 upward.
// Only what irreducibility testing and tower-field arithmetic need.
namespace rmsid::poly {

using Poly = std::vector<Symbol>;

void trim(Poly& a);
/// -1 for the zero polynomial.
int degree(const Poly& a) noexcept;

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
/// Remainder of a modulo a nonzero divisor.
Poly mod(const Field& f, Poly a, const Poly& divisor);
Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& modulus);
Poly powmod(const Field& f, Poly base, std::uint64_t exponent, const Poly& modulus);
/// Monic greatest common divisor (zero if both are zero).
Poly gcd(const Field& f, Poly a, Poly b);

Symbol evaluate(const Field& f, const Poly& a, Symbol x) noexcept;

/// Ben-Or test: gcd(f, x^(q^i) - x) = 1 for every i <= deg/2.
bool is_irreducible(const Field& f, const Poly& candidate);
/// Trial division by every monic polynomial of degree 1..deg/2.
bool has_small_factor(const Field& f, const Poly& candidate);
/// Lowest monic irreducible of the given degree, ordering candidates by the
/// base-q integer of their lower coefficients.
Poly lowest_irreducible(const Field& f, std::uint32_t degree);

}  // namespace rmsid::poly

#endif
