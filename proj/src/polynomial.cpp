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

#include "rmsid/polynomial.hpp"

#include <algorithm>

namespace rmsid::poly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) noexcept {
    for (std::size_t i = a.size(); i > 0; --i)
        if (a[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Symbol x = i < a.size() ? a[i] : 0;
        const Symbol y = i < b.size() ? b[i] : 0;
        r[i] = f.add(x, y);
    }
    trim(r);
    return r;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Symbol x = i < a.size() ? a[i] : 0;
        const Symbol y = i < b.size() ? b[i] : 0;
        r[i] = f.sub(x, y);
    }
    trim(r);
    return r;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

Poly mod(const Field& f, Poly a, const Poly& divisor) {
    const int dd = degree(divisor);
    if (dd < 0) throw Error(ErrorKind::division_by_zero, "polynomial division by zero");
    trim(a);
    const Symbol lead_inv = f.inv(divisor[static_cast<std::size_t>(dd)]);
    for (int i = degree(a); i >= dd; i = degree(a)) {
        const Symbol c = f.mul(a[static_cast<std::size_t>(i)], lead_inv);
        const std::size_t shift = static_cast<std::size_t>(i - dd);
        for (int j = 0; j <= dd; ++j) {
            auto& slot = a[shift + static_cast<std::size_t>(j)];
            slot = f.sub(slot, f.mul(c, divisor[static_cast<std::size_t>(j)]));
        }
        trim(a);
    }
    return a;
}

Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& modulus) {
    return mod(f, mul(f, a, b), modulus);
}

Poly powmod(const Field& f, Poly base, std::uint64_t exponent, const Poly& modulus) {
    Poly result = mod(f, Poly{1}, modulus);
    base = mod(f, std::move(base), modulus);
    while (exponent) {
        if (exponent & 1) result = mulmod(f, result, base, modulus);
        exponent >>= 1;
        if (exponent) base = mulmod(f, base, base, modulus);
    }
    return result;
}

Poly gcd(const Field& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const Symbol lead_inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, lead_inv);
    return a;
}

Symbol evaluate(const Field& f, const Poly& a, Symbol x) noexcept {
    Symbol acc = 0;
    for (std::size_t i = a.size(); i > 0; --i) acc = f.add(f.mul(acc, x), a[i - 1]);
    return acc;
}

bool is_irreducible(const Field& f, const Poly& candidate) {
    const int n = degree(candidate);
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x{0, 1};
    Poly h = x;  // x^(q^i) mod candidate
    for (int i = 1; i <= n / 2; ++i) {
        h = powmod(f, h, f.size(), candidate);
        if (degree(gcd(f, candidate, sub(f, h, x))) > 0) return false;
    }
    return true;
}

bool has_small_factor(const Field& f, const Poly& candidate) {
    const int n = degree(candidate);
    const std::uint64_t q = f.size();
    for (int d = 1; d <= n / 2; ++d) {
        // Every monic divisor of degree d, lower coefficients as base-q digits.
        Poly divisor(static_cast<std::size_t>(d) + 1, 0);
        divisor.back() = 1;
        for (;;) {
            if (mod(f, candidate, divisor).empty()) return true;
            std::size_t i = 0;
            while (i < static_cast<std::size_t>(d) && divisor[i] + 1 == q) divisor[i++] = 0;
            if (i == static_cast<std::size_t>(d)) break;
            ++divisor[i];
        }
    }
    return false;
}

Poly lowest_irreducible(const Field& f, std::uint32_t degree) {
    if (degree == 0) throw Error(ErrorKind::invalid_parameter, "irreducible degree must be at least 1");
    Poly candidate(degree + 1, 0);
    candidate.back() = 1;
    const std::uint64_t q = f.size();
    for (;;) {
        if (is_irreducible(f, candidate)) return candidate;
        std::size_t i = 0;
        while (i < degree && candidate[i] + 1 == q) candidate[i++] = 0;
        if (i == degree) break;
        ++candidate[i];
    }
    throw Error(ErrorKind::infeasible, "no irreducible polynomial found");  // unreachable for valid fields
}

}  // namespace rmsid::poly
