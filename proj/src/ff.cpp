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

#include "rmsid/ff.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "rmsid/polynomial.hpp"

namespace rmsid {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 32;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t checked_power(std::uint32_t p, std::uint32_t m) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw Error(ErrorKind::invalid_parameter,
                        "field size " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^32");
    }
    return q;
}

struct Registry {
    std::mutex mutex;
    std::map<std::tuple<std::uint32_t, std::vector<std::uint32_t>>, std::shared_ptr<const Field>> by_modulus;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Field>> by_degree;
};

Registry& registry() {
    static Registry instance;
    return instance;
}

void validate_modulus(std::uint32_t p, const std::vector<std::uint32_t>& irreducible) {
    if (irreducible.size() < 2)
        throw Error(ErrorKind::invalid_parameter, "modulus must have degree at least 1");
    if (irreducible.back() != 1) throw Error(ErrorKind::invalid_parameter, "modulus must be monic");
    for (auto c : irreducible)
        if (c >= p) throw Error(ErrorKind::invalid_parameter, "modulus coefficient not below p");
    const auto m = static_cast<std::uint32_t>(irreducible.size() - 1);
    if (m == 1) return;
    const auto prime = Field::get(p, 1);
    const poly::Poly f(irreducible.begin(), irreducible.end());
    if (!poly::is_irreducible(*prime, f))
        throw Error(ErrorKind::invalid_parameter, "modulus is reducible over GF(p)");
    // Second, independent check where exhaustive trial division is cheap.
    if (static_cast<double>(m) * std::log2(static_cast<double>(p)) <= 24.0 && poly::has_small_factor(*prime, f))
        throw Error(ErrorKind::invalid_parameter, "modulus has a small factor over GF(p)");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
    if (q < 2 || q > kMaxFieldSize)
        throw Error(ErrorKind::invalid_parameter, "field size " + std::to_string(q) + " outside [2, 2^32]");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw Error(ErrorKind::invalid_parameter, std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), m};
}

std::shared_ptr<const Field> Field::intern(FieldParams params) {
    auto& reg = registry();
    const auto key = std::make_tuple(params.p, params.irreducible);
    {
        std::lock_guard lock(reg.mutex);
        if (auto it = reg.by_modulus.find(key); it != reg.by_modulus.end()) return it->second;
    }
    auto field = std::make_shared<const Field>(Token{}, std::move(params));
    std::lock_guard lock(reg.mutex);
    auto [it, inserted] = reg.by_modulus.emplace(key, std::move(field));
    return it->second;
}

std::shared_ptr<const Field> Field::get(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw Error(ErrorKind::invalid_parameter, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(ErrorKind::invalid_parameter, "extension degree must be at least 1");
    const std::uint64_t q = checked_power(p, m);
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mutex);
        if (auto it = reg.by_degree.find({p, m}); it != reg.by_degree.end()) return it->second;
    }
    std::vector<std::uint32_t> modulus;
    if (m == 1) {
        modulus = {0, 1};
    } else {
        const auto prime = get(p, 1);
        const auto f = poly::lowest_irreducible(*prime, m);
        modulus.assign(f.begin(), f.end());
        validate_modulus(p, modulus);
    }
    auto field = intern(FieldParams{p, m, std::move(modulus), q});
    std::lock_guard lock(reg.mutex);
    reg.by_degree.emplace(std::make_pair(p, m), field);
    return field;
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
    const auto [p, m] = prime_power(q);
    return get(p, m);
}

std::shared_ptr<const Field> Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> irreducible) {
    if (!is_prime(p)) throw Error(ErrorKind::invalid_parameter, std::to_string(p) + " is not prime");
    validate_modulus(p, irreducible);
    const auto m = static_cast<std::uint32_t>(irreducible.size() - 1);
    const std::uint64_t q = checked_power(p, m);
    return intern(FieldParams{p, m, std::move(irreducible), q});
}

Field::Field(Token, FieldParams params) : params_(std::move(params)) {
    symbol_bytes_ = (static_cast<std::size_t>(std::bit_width(params_.q - 1)) + 7) / 8;
    if (params_.p == 2)
        for (std::size_t i = 0; i < params_.irreducible.size(); ++i)
            if (params_.irreducible[i]) binary_modulus_ |= std::uint64_t{1} << i;

    // Primitive element: g with g^((q-1)/r) != 1 for every prime r | q-1.
    const std::uint64_t ord = order();
    const auto factors = prime_factors(ord);
    auto pow_ref = [&](Symbol a, std::uint64_t e) {
        Symbol r = 1;
        while (e) {
            if (e & 1) r = mul_reference(r, a);
            e >>= 1;
            if (e) a = mul_reference(a, a);
        }
        return r;
    };
    for (std::uint64_t g = 1; g < params_.q; ++g) {
        bool generator = true;
        for (auto r : factors)
            if (pow_ref(static_cast<Symbol>(g), ord / r) == 1) {
                generator = false;
                break;
            }
        if (generator) {
            primitive_ = static_cast<Symbol>(g);
            break;
        }
    }
    if (params_.q <= kTableLimit) build_tables();
}

void Field::build_tables() {
    const std::uint64_t ord = order();
    exp_.resize(2 * ord);
    log_.assign(params_.q, kNoLog);
    Symbol x = 1;
    for (std::uint64_t i = 0; i < ord; ++i) {
        exp_[i] = x;
        exp_[i + ord] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_reference(x, primitive_);
    }
    zech_.resize(ord);
    for (std::uint64_t d = 0; d < ord; ++d) {
        const Symbol s = add_reference(1, exp_[d]);
        zech_[d] = s == 0 ? kNoLog : log_[s];
    }
}

Symbol Field::add(Symbol a, Symbol b) const noexcept {
    if (params_.p == 2) return a ^ b;
    if (params_.m == 1) {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Symbol>(s >= params_.p ? s - params_.p : s);
    }
    if (has_tables()) {
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t ord = static_cast<std::uint32_t>(order());
        const std::uint32_t la = log_[a];
        const std::uint32_t lb = log_[b];
        const std::uint32_t d = lb >= la ? lb - la : lb + ord - la;
        const std::uint32_t z = zech_[d];
        return z == kNoLog ? 0 : exp_[la + z];
    }
    return add_reference(a, b);
}

Symbol Field::neg(Symbol a) const noexcept {
    if (params_.p == 2 || a == 0) return a;
    if (params_.m == 1) return params_.p - a;
    if (has_tables()) return exp_[log_[a] + order() / 2];
    return neg_reference(a);
}

Symbol Field::mul(Symbol a, Symbol b) const noexcept {
    if (has_tables()) {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    if (params_.m == 1) return static_cast<Symbol>(std::uint64_t{a} * b % params_.p);
    if (params_.p == 2) return mul_binary(a, b);
    return mul_reference(a, b);
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) throw Error(ErrorKind::division_by_zero, "inverse of zero in " + name());
    if (has_tables()) return exp_[order() - log_[a]];
    return pow(a, params_.q - 2);
}

Symbol Field::pow(Symbol a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    e %= order();
    if (e == 0) return 1;
    if (has_tables()) return exp_[static_cast<std::uint64_t>(log_[a]) * e % order()];
    Symbol r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

Symbol Field::add_reference(Symbol a, Symbol b) const noexcept {
    const std::uint32_t p = params_.p;
    std::uint64_t result = 0;
    std::uint64_t place = 1;
    for (std::uint32_t i = 0; i < params_.m; ++i) {
        const std::uint64_t s = a % p + b % p;
        result += (s >= p ? s - p : s) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return static_cast<Symbol>(result);
}

Symbol Field::neg_reference(Symbol a) const noexcept {
    const std::uint32_t p = params_.p;
    std::uint64_t result = 0;
    std::uint64_t place = 1;
    for (std::uint32_t i = 0; i < params_.m; ++i) {
        const std::uint32_t d = a % p;
        result += (d == 0 ? 0 : p - d) * place;
        a /= p;
        place *= p;
    }
    return static_cast<Symbol>(result);
}

Symbol Field::mul_reference(Symbol a, Symbol b) const noexcept {
    const std::uint64_t p = params_.p;
    const std::uint32_t m = params_.m;
    // q <= 2^32 bounds m by 32.
    std::array<std::uint64_t, 32> da{}, db{};
    std::array<std::uint64_t, 64> prod{};
    for (std::uint32_t i = 0; i < m; ++i) {
        da[i] = a % p;
        db[i] = b % p;
        a /= static_cast<Symbol>(p);
        b /= static_cast<Symbol>(p);
    }
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const auto& f = params_.irreducible;
    for (std::uint32_t i = 2 * m - 2; i >= m; --i) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j) prod[i - m + j] = (prod[i - m + j] + (p - c) * f[j]) % p;
        prod[i] = 0;
    }
    std::uint64_t result = 0;
    for (std::uint32_t i = m; i > 0; --i) result = result * p + prod[i - 1];
    return static_cast<Symbol>(result);
}

Symbol Field::mul_binary(Symbol a, Symbol b) const noexcept {
    std::uint64_t prod = 0;
    std::uint64_t x = a;
    for (Symbol y = b; y; y >>= 1, x <<= 1)
        if (y & 1) prod ^= x;
    const std::uint32_t m = params_.m;
    for (std::uint32_t i = 2 * m - 2; i >= m; --i)
        if (prod >> i & 1) prod ^= binary_modulus_ << (i - m);
    return static_cast<Symbol>(prod);
}

std::vector<std::uint32_t> Field::digits(Symbol a) const {
    if (!contains(a)) throw Error(ErrorKind::invalid_parameter, "symbol outside " + name());
    std::vector<std::uint32_t> out(params_.m);
    for (auto& d : out) {
        d = a % params_.p;
        a /= params_.p;
    }
    return out;
}

Symbol Field::from_digits(std::span<const std::uint32_t> digits) const {
    if (digits.size() != params_.m)
        throw Error(ErrorKind::shape_mismatch, "expected " + std::to_string(params_.m) + " digits");
    std::uint64_t v = 0;
    for (std::size_t i = digits.size(); i > 0; --i) {
        if (digits[i - 1] >= params_.p) throw Error(ErrorKind::invalid_parameter, "digit not below p");
        v = v * params_.p + digits[i - 1];
    }
    return static_cast<Symbol>(v);
}

std::string Field::name() const {
    if (params_.m == 1) return "GF(" + std::to_string(params_.p) + ")";
    return "GF(" + std::to_string(params_.p) + "^" + std::to_string(params_.m) + ")";
}

FieldElement::FieldElement(const Field& field, Symbol value) : field_(&field), value_(value) {
    if (!field.contains(value))
        throw Error(ErrorKind::invalid_parameter, std::to_string(value) + " is not an element of " + field.name());
}

void FieldElement::check_same_field(const FieldElement& rhs) const {
    if (field_ != rhs.field_)
        throw Error(ErrorKind::field_mismatch, "operands from " + field_->name() + " and " + rhs.field_->name());
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same_field(rhs);
    return {*field_, field_->add(value_, rhs.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same_field(rhs);
    return {*field_, field_->sub(value_, rhs.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same_field(rhs);
    return {*field_, field_->mul(value_, rhs.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    check_same_field(rhs);
    return {*field_, field_->div(value_, rhs.value_)};
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    check_same_field(rhs);
    return value_ == rhs.value_;
}

FieldVector FieldVector::zeros(const Field& field, std::size_t length) {
    return {field, std::vector<Symbol>(length, 0)};
}

FieldVector::FieldVector(const Field& field, std::vector<Symbol> values)
    : field_(&field), values_(std::move(values)) {
    for (auto v : values_)
        if (!field.contains(v))
            throw Error(ErrorKind::invalid_parameter, std::to_string(v) + " is not an element of " + field.name());
}

void FieldVector::set(std::size_t i, const FieldElement& value) {
    if (&value.field() != field_)
        throw Error(ErrorKind::field_mismatch, "element from " + value.field().name() + " stored in a vector over " +
                                                   field_->name());
    values_.at(i) = value.value();
}

void FieldVector::set(std::size_t i, Symbol value) {
    if (!field_->contains(value))
        throw Error(ErrorKind::invalid_parameter, std::to_string(value) + " is not an element of " + field_->name());
    values_.at(i) = value;
}

FieldElement dot(const FieldVector& u, const FieldVector& v) {
    if (&u.field() != &v.field()) throw Error(ErrorKind::field_mismatch, "dot product across fields");
    if (u.size() != v.size())
        throw Error(ErrorKind::shape_mismatch,
                    "dot product of lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
    const Field& f = u.field();
    Symbol acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u.values()[i], v.values()[i]));
    return {f, acc};
}

Symbol sample_symbol(EntropySource& rng, const Field& field) {
    const std::uint32_t p = field.characteristic();
    std::uint64_t value = 0;
    std::uint64_t place = 1;
    for (std::uint32_t i = 0; i < field.degree(); ++i) {
        value += rng.uniform_below(p) * place;
        place *= p;
    }
    return static_cast<Symbol>(value);
}

FieldElement sample_uniform(EntropySource& rng, const Field& field) { return {field, sample_symbol(rng, field)}; }

}  // namespace rmsid
