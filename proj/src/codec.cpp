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

#include "rmsid/codec.hpp"

#include <cmath>
#include <string>

namespace rmsid::codec {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) throw Error(ErrorKind::parse_error, std::string("expected an object with \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw Error(ErrorKind::parse_error, std::string("missing field \"") + key + "\"");
    return *it;
}

std::uint64_t unsigned_value(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw Error(ErrorKind::parse_error, std::string(what) + " must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

std::uint32_t u32(const Json& j, const char* key) {
    const std::uint64_t v = unsigned_value(member(j, key), key);
    if (v > 0xFFFFFFFFu) throw Error(ErrorKind::parse_error, std::string(key) + " out of range");
    return static_cast<std::uint32_t>(v);
}

Symbol symbol_value(const Json& j, const Field& field) {
    const std::uint64_t v = unsigned_value(j, "symbol");
    if (!field.contains(v))
        throw Error(ErrorKind::parse_error, "symbol " + std::to_string(v) + " is not an element of " + field.name());
    return static_cast<Symbol>(v);
}

FieldVector vector_value(const Json& j, const Field& field) {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, "expected an array of symbols");
    std::vector<Symbol> values;
    values.reserve(j.size());
    for (const auto& v : j) values.push_back(symbol_value(v, field));
    return {field, std::move(values)};
}

Json vector_json(const FieldVector& v) {
    Json out = Json::array();
    for (auto s : v.values()) out.push_back(s);
    return out;
}

}  // namespace

Json to_json(const FieldParams& params) {
    return Json{{"p", params.p}, {"m", params.m}, {"irreducible", params.irreducible}};
}

std::shared_ptr<const Field> field_from_json(const Json& j) {
    const std::uint32_t p = u32(j, "p");
    const std::uint32_t m = u32(j, "m");
    if (!j.contains("irreducible")) return Field::get(p, m);
    const Json& irr = j["irreducible"];
    if (!irr.is_array()) throw Error(ErrorKind::parse_error, "irreducible must be an array");
    std::vector<std::uint32_t> coeffs;
    for (const auto& c : irr) coeffs.push_back(static_cast<std::uint32_t>(unsigned_value(c, "coefficient")));
    if (coeffs.size() != std::size_t{m} + 1)
        throw Error(ErrorKind::parse_error, "irreducible needs m + 1 coefficients");
    return Field::with_modulus(p, std::move(coeffs));
}

Json to_json(const Identity& id) {
    const IdCodeParams& params = id.params();
    return Json{{"q_params", to_json(params.field().params())},
                {"ell", params.ell()},
                {"k", params.k()},
                {"n", params.n_challenges()},
                {"coeffs", vector_json(id.coeffs())}};
}

Identity identity_from_json(const Json& j) {
    auto field = field_from_json(member(j, "q_params"));
    const std::uint32_t n = j.contains("n") ? u32(j, "n") : 1;
    IdCodeParams params(field, u32(j, "ell"), u32(j, "k"), n);
    return {params, vector_value(member(j, "coeffs"), *field)};
}

Json to_json(const Challenge& c) { return Json{{"r", vector_json(c.r)}, {"tag", c.tag.value()}}; }

Challenge challenge_from_json(const Json& j, const Field& field) {
    return {vector_value(member(j, "r"), field), FieldElement(field, symbol_value(member(j, "tag"), field))};
}

Json to_json(const MultiChallenge& mc) {
    Json list = Json::array();
    for (const auto& c : mc.challenges) list.push_back(to_json(c));
    return Json{{"challenges", std::move(list)}};
}

MultiChallenge multi_from_json(const Json& j, const Field& field) {
    MultiChallenge mc;
    if (j.is_object() && j.contains("challenges")) {
        const Json& list = j["challenges"];
        if (!list.is_array()) throw Error(ErrorKind::parse_error, "challenges must be an array");
        for (const auto& c : list) mc.challenges.push_back(challenge_from_json(c, field));
    } else {
        mc.challenges.push_back(challenge_from_json(j, field));
    }
    return mc;
}

Json to_json(const Seed& seed) {
    return Json{{"pivot", seed.pivot}, {"s", vector_json(seed.s)}, {"s0", seed.s0.value()}};
}

Seed seed_from_json(const Json& j, const Field& field) {
    Seed seed{vector_value(member(j, "s"), field), FieldElement(field, symbol_value(member(j, "s0"), field)),
              u32(j, "pivot")};
    validate_seed(seed);
    return seed;
}

Json seeds_to_json(const std::vector<Seed>& seeds) {
    Json list = Json::array();
    for (const auto& s : seeds) list.push_back(to_json(s));
    return Json{{"seeds", std::move(list)}};
}

std::vector<Seed> seeds_from_json(const Json& j, const Field& field) {
    std::vector<Seed> out;
    if (j.is_object() && j.contains("seeds")) {
        const Json& list = j["seeds"];
        if (!list.is_array()) throw Error(ErrorKind::parse_error, "seeds must be an array");
        for (const auto& s : list) out.push_back(seed_from_json(s, field));
    } else {
        out.push_back(seed_from_json(j, field));
    }
    return out;
}

Json to_json(const SecretChallenge& sc) { return Json{{"r", vector_json(sc.r)}, {"x", vector_json(sc.x.x)}}; }

SecretChallenge secret_from_json(const Json& j, const Field& field) {
    return {vector_value(member(j, "r"), field), Ciphertext{vector_value(member(j, "x"), field)}};
}

Json secrets_to_json(const std::vector<SecretChallenge>& items) {
    Json list = Json::array();
    for (const auto& sc : items) list.push_back(to_json(sc));
    return Json{{"challenges", std::move(list)}};
}

std::vector<SecretChallenge> secrets_from_json(const Json& j, const Field& field) {
    std::vector<SecretChallenge> out;
    if (j.is_object() && j.contains("challenges")) {
        const Json& list = j["challenges"];
        if (!list.is_array()) throw Error(ErrorKind::parse_error, "challenges must be an array");
        for (const auto& sc : list) out.push_back(secret_from_json(sc, field));
    } else {
        out.push_back(secret_from_json(j, field));
    }
    return out;
}

Json to_json(const LeakageReport& r) {
    return Json{{"q", r.q},
                {"ell_prime", r.ell_prime},
                {"channel", r.channel},
                {"exact_max_tv", r.exact_max_tv},
                {"exact_pairwise_tv", r.exact_pairwise_tv},
                {"d2_bits", r.d2_bits},
                {"kappa_true", r.kappa_true},
                {"bound_tight", r.bound_tight},
                {"bound_simplified", r.bound_simplified},
                {"max_within_tight", r.max_within_tight},
                {"pairwise_within_tight", r.pairwise_within_tight},
                {"tight_within_simplified", r.tight_within_simplified},
                {"exact_arithmetic", r.exact_arithmetic},
                {"states", r.states}};
}

Json to_json(const CapacityDiagnostics& d) {
    return Json{{"n_seq", d.n_seq},
                {"log2_q", d.log2_q},
                {"log2_k", d.log2_k},
                {"log2_ell", d.log2_ell},
                {"tag_ratio", d.tag_ratio},
                {"error_ratio", d.error_ratio},
                {"binomial_lower", d.binomial_lower},
                {"binomial_upper", d.binomial_upper},
                {"binomial_ratio", d.binomial_ratio},
                {"loglog_ratio", d.loglog_ratio},
                {"asymptote", d.asymptote},
                {"lower_gap", d.lower_gap}};
}

Json to_json(const LeakageBound& bound) { return Json{{"tight", bound.tight}, {"simplified", bound.simplified}}; }

void put_symbol(std::vector<std::uint8_t>& out, const Field& field, Symbol value) {
    for (std::size_t b = field.symbol_bytes(); b-- > 0;) out.push_back(static_cast<std::uint8_t>(value >> (8 * b)));
}

Symbol get_symbol(std::span<const std::uint8_t> in, std::size_t& offset, const Field& field) {
    const std::size_t width = field.symbol_bytes();
    if (offset + width > in.size()) throw Error(ErrorKind::parse_error, "truncated symbol");
    std::uint64_t value = 0;
    for (std::size_t b = 0; b < width; ++b) value = (value << 8) | in[offset + b];
    offset += width;
    if (!field.contains(value))
        throw Error(ErrorKind::parse_error, "symbol " + std::to_string(value) + " is not an element of " + field.name());
    return static_cast<Symbol>(value);
}

namespace {

void put_vector(std::vector<std::uint8_t>& out, const FieldVector& v) {
    for (auto s : v.values()) put_symbol(out, v.field(), s);
}

FieldVector get_vector(std::span<const std::uint8_t> in, std::size_t& offset, const Field& field, std::size_t len) {
    std::vector<Symbol> values(len);
    for (auto& v : values) v = get_symbol(in, offset, field);
    return {field, std::move(values)};
}

std::size_t record_count(std::size_t total, std::size_t record) {
    if (record == 0 || total % record != 0)
        throw Error(ErrorKind::parse_error, std::to_string(total) + " bytes is not a whole number of " +
                                                std::to_string(record) + "-byte records");
    return total / record;
}

}  // namespace

std::vector<std::uint8_t> encode_challenge(const Challenge& c) {
    std::vector<std::uint8_t> out;
    put_vector(out, c.r);
    put_symbol(out, c.tag.field(), c.tag.value());
    return out;
}

Challenge decode_challenge(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell) {
    std::size_t offset = 0;
    FieldVector r = get_vector(in, offset, field, ell);
    FieldElement tag(field, get_symbol(in, offset, field));
    if (offset != in.size()) throw Error(ErrorKind::parse_error, "trailing bytes after challenge");
    return {std::move(r), tag};
}

std::vector<std::uint8_t> encode_multi(const MultiChallenge& mc) {
    std::vector<std::uint8_t> out;
    for (const auto& c : mc.challenges) {
        auto bytes = encode_challenge(c);
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
}

MultiChallenge decode_multi(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell) {
    const std::size_t record = (std::size_t{ell} + 1) * field.symbol_bytes();
    MultiChallenge mc;
    for (std::size_t i = 0, n = record_count(in.size(), record); i < n; ++i)
        mc.challenges.push_back(decode_challenge(in.subspan(i * record, record), field, ell));
    return mc;
}

std::vector<std::uint8_t> encode_secret(const SecretChallenge& sc) {
    std::vector<std::uint8_t> out;
    put_vector(out, sc.r);
    put_vector(out, sc.x.x);
    return out;
}

SecretChallenge decode_secret(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell,
                              std::uint32_t ell_prime) {
    std::size_t offset = 0;
    FieldVector r = get_vector(in, offset, field, ell);
    FieldVector x = get_vector(in, offset, field, ell_prime);
    if (offset != in.size()) throw Error(ErrorKind::parse_error, "trailing bytes after secret challenge");
    return {std::move(r), Ciphertext{std::move(x)}};
}

std::vector<std::uint8_t> encode_secrets(const std::vector<SecretChallenge>& items) {
    std::vector<std::uint8_t> out;
    for (const auto& sc : items) {
        auto bytes = encode_secret(sc);
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
}

std::vector<SecretChallenge> decode_secrets(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell,
                                            std::uint32_t ell_prime) {
    const std::size_t record = (std::size_t{ell} + ell_prime) * field.symbol_bytes();
    std::vector<SecretChallenge> out;
    for (std::size_t i = 0, n = record_count(in.size(), record); i < n; ++i)
        out.push_back(decode_secret(in.subspan(i * record, record), field, ell, ell_prime));
    return out;
}

std::vector<std::uint8_t> encode_seed(const Seed& seed) {
    validate_seed(seed);
    if (seed.s.size() > 255) throw Error(ErrorKind::too_large, "binary seeds support at most 255 coordinates");
    std::vector<std::uint8_t> out{static_cast<std::uint8_t>(seed.pivot)};
    put_vector(out, seed.s);
    put_symbol(out, seed.s0.field(), seed.s0.value());
    return out;
}

Seed decode_seed(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell_prime) {
    if (in.empty()) throw Error(ErrorKind::parse_error, "empty seed");
    std::size_t offset = 1;
    FieldVector s = get_vector(in, offset, field, ell_prime);
    FieldElement s0(field, get_symbol(in, offset, field));
    if (offset != in.size()) throw Error(ErrorKind::parse_error, "trailing bytes after seed");
    Seed seed{std::move(s), s0, in[0]};
    validate_seed(seed);
    return seed;
}

std::vector<std::uint8_t> encode_seeds(const std::vector<Seed>& seeds) {
    std::vector<std::uint8_t> out;
    for (const auto& s : seeds) {
        auto bytes = encode_seed(s);
        out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
}

std::vector<Seed> decode_seeds(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell_prime) {
    const std::size_t record = 1 + (std::size_t{ell_prime} + 1) * field.symbol_bytes();
    std::vector<Seed> out;
    for (std::size_t i = 0, n = record_count(in.size(), record); i < n; ++i)
        out.push_back(decode_seed(in.subspan(i * record, record), field, ell_prime));
    return out;
}

}  // namespace rmsid::codec
