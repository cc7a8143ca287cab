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

#ifndef RMSID_FF_HPP
#define RMSID_FF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rmsid/entropy.hpp"
#include "rmsid/error.hpp"

namespace rmsid {

/// Canonical integer encoding of a field element: little-endian base-p
/// digits of its polynomial-basis representation, in [0, q).
using Symbol = std::uint32_t;

/// Fields up to this size get exp/log/Zech tables.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

struct FieldParams {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    /// Monic modulus, m+1 coefficients from x^0 up to x^m.
    std::vector<std::uint32_t> irreducible;
    std::uint64_t q = 2;

    bool operator==(const FieldParams&) const = default;
};

/**
 * GF(p^m) for prime p and p^m <= 2^32.
 *
 * Instances are interned: `Field::get` returns the same object for the same
 * parameters for the lifetime of the program, so element operations can
 * compare field identity by address and raw `const Field*` never dangle.
 * A Field is immutable after construction and safe to share across threads.
 */
class Field {
  public:
    /// GF(p^m) with the lowest monic irreducible of degree m (ordered by the
    /// canonical integer of its lower coefficients).
    static std::shared_ptr<const Field> get(std::uint32_t p, std::uint32_t m);
    /// GF(q) for a prime power q.
    static std::shared_ptr<const Field> of_order(std::uint64_t q);
    /// GF(p^m) with a caller-supplied modulus, verified irreducible.
    static std::shared_ptr<const Field> with_modulus(std::uint32_t p,
                                                     std::vector<std::uint32_t> irreducible);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    const FieldParams& params() const noexcept { return params_; }
    std::uint32_t characteristic() const noexcept { return params_.p; }
    std::uint32_t degree() const noexcept { return params_.m; }
    std::uint64_t size() const noexcept { return params_.q; }
    /// Order of the multiplicative group, q - 1.
    std::uint64_t order() const noexcept { return params_.q - 1; }

    /// Symbol width in the binary wire format: ceil(ceil(log2 q) / 8) bytes.
    std::size_t symbol_bytes() const noexcept { return symbol_bytes_; }

    Symbol add(Symbol a, Symbol b) const noexcept;
    Symbol sub(Symbol a, Symbol b) const noexcept { return add(a, neg(b)); }
    Symbol neg(Symbol a) const noexcept;
    Symbol mul(Symbol a, Symbol b) const noexcept;
    /// Throws Error(division_by_zero) for a == 0.
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, std::uint64_t e) const noexcept;

    /// Digit-wise addition, independent of the table path.
    Symbol add_reference(Symbol a, Symbol b) const noexcept;
    /// Schoolbook polynomial product reduced by the modulus.
    Symbol mul_reference(Symbol a, Symbol b) const noexcept;

    std::vector<std::uint32_t> digits(Symbol a) const;
    Symbol from_digits(std::span<const std::uint32_t> digits) const;

    bool contains(std::uint64_t value) const noexcept { return value < params_.q; }

    /// Generator used to build the tables (1 for q = 2).
    Symbol primitive_element() const noexcept { return primitive_; }

    /// Table accessors for hot loops. Logs live in [0, q-1); `kNoLog` marks
    /// the logarithm of zero and a Zech entry where 1 + g^d = 0. The exp
    /// table has 2(q-1) entries so sums of two logs index it directly.
    static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;
    bool has_tables() const noexcept { return !log_.empty(); }
    std::span<const std::uint32_t> exp_table() const noexcept { return exp_; }
    std::span<const std::uint32_t> log_table() const noexcept { return log_; }
    std::span<const std::uint32_t> zech_table() const noexcept { return zech_; }

    std::string name() const;

  private:
    struct Token {};

  public:
    Field(Token, FieldParams params);

  private:
    static std::shared_ptr<const Field> intern(FieldParams params);

    void build_tables();
    Symbol mul_binary(Symbol a, Symbol b) const noexcept;
    Symbol neg_reference(Symbol a) const noexcept;

    FieldParams params_;
    std::size_t symbol_bytes_ = 1;
    Symbol primitive_ = 1;
    std::uint64_t binary_modulus_ = 0;  // p == 2: modulus as a bit mask
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

/// Validating lookup: p prime, m >= 1, irreducible monic modulus.
bool is_prime(std::uint64_t n) noexcept;

/// Decomposes a prime power q = p^m; throws invalid_parameter otherwise.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

class FieldElement {
  public:
    FieldElement(const Field& field, Symbol value);
    static FieldElement zero(const Field& field) { return {field, 0}; }
    static FieldElement one(const Field& field) { return {field, 1}; }

    const Field& field() const noexcept { return *field_; }
    Symbol value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    std::vector<std::uint32_t> digits() const { return field_->digits(value_); }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    FieldElement inv() const { return {*field_, field_->inv(value_)}; }
    FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow(value_, e)}; }

    /// Equality requires the same field; comparing across fields throws.
    bool operator==(const FieldElement& rhs) const;

  private:
    void check_same_field(const FieldElement& rhs) const;

    const Field* field_;
    Symbol value_;
};

class FieldVector {
  public:
    FieldVector(const Field& field, std::vector<Symbol> values);
    static FieldVector zeros(const Field& field, std::size_t length);

    const Field& field() const noexcept { return *field_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    FieldElement operator[](std::size_t i) const { return {*field_, values_.at(i)}; }
    void set(std::size_t i, const FieldElement& value);
    void set(std::size_t i, Symbol value);

    std::span<const Symbol> values() const noexcept { return values_; }

    bool operator==(const FieldVector& rhs) const {
        return field_ == rhs.field_ && values_ == rhs.values_;
    }

  private:
    const Field* field_;
    std::vector<Symbol> values_;
};

/// Inner product; throws shape_mismatch or field_mismatch.
FieldElement dot(const FieldVector& u, const FieldVector& v);

/// Uniform element by drawing the m base-p digits independently.
FieldElement sample_uniform(EntropySource& rng, const Field& field);
Symbol sample_symbol(EntropySource& rng, const Field& field);

}  // namespace rmsid

#endif
