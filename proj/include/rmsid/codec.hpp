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

#ifndef RMSID_CODEC_HPP
#define RMSID_CODEC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "rmsid/analysis.hpp"
#include "rmsid/ff.hpp"
#include "rmsid/rmid.hpp"
#include "rmsid/wiretap.hpp"

// JSON and binary wire formats. JSON symbols are canonical integers; binary
// symbols are big-endian, Field::symbol_bytes() wide each, with no framing.
namespace rmsid::codec {

using Json = nlohmann::ordered_json;

Json to_json(const FieldParams& params);
/// Accepts {"p","m"} (lowest irreducible) or {"p","m","irreducible"}.
std::shared_ptr<const Field> field_from_json(const Json& j);

Json to_json(const Identity& id);
Identity identity_from_json(const Json& j);

Json to_json(const Challenge& c);
Challenge challenge_from_json(const Json& j, const Field& field);

Json to_json(const MultiChallenge& mc);
/// Accepts a multi-challenge object or a single challenge object.
MultiChallenge multi_from_json(const Json& j, const Field& field);

Json to_json(const Seed& seed);
Seed seed_from_json(const Json& j, const Field& field);
Json seeds_to_json(const std::vector<Seed>& seeds);
/// Accepts {"seeds": [...]} or a single seed object.
std::vector<Seed> seeds_from_json(const Json& j, const Field& field);

/// {"r": [...], "x": [...]}: a challenge with its tag replaced by the
/// ciphertext.
struct SecretChallenge {
    FieldVector r;
    Ciphertext x;

    bool operator==(const SecretChallenge&) const = default;
};

Json to_json(const SecretChallenge& sc);
SecretChallenge secret_from_json(const Json& j, const Field& field);
Json secrets_to_json(const std::vector<SecretChallenge>& items);
std::vector<SecretChallenge> secrets_from_json(const Json& j, const Field& field);

Json to_json(const LeakageReport& report);
Json to_json(const CapacityDiagnostics& d);
Json to_json(const LeakageBound& bound);

void put_symbol(std::vector<std::uint8_t>& out, const Field& field, Symbol value);
/// Reads one symbol at `offset`, advancing it; rejects values >= q.
Symbol get_symbol(std::span<const std::uint8_t> in, std::size_t& offset, const Field& field);

/// ell + 1 symbols: r, then the tag.
std::vector<std::uint8_t> encode_challenge(const Challenge& c);
Challenge decode_challenge(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell);
/// n consecutive challenge records.
std::vector<std::uint8_t> encode_multi(const MultiChallenge& mc);
MultiChallenge decode_multi(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell);

/// ell + ell' symbols: r, then x.
std::vector<std::uint8_t> encode_secret(const SecretChallenge& sc);
SecretChallenge decode_secret(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell,
                              std::uint32_t ell_prime);
std::vector<std::uint8_t> encode_secrets(const std::vector<SecretChallenge>& items);
std::vector<SecretChallenge> decode_secrets(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell,
                                            std::uint32_t ell_prime);

/// One pivot byte (1-based), ell' symbols of s, one symbol s0. Lengths above
/// 255 do not fit the pivot byte and are rejected.
std::vector<std::uint8_t> encode_seed(const Seed& seed);
Seed decode_seed(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell_prime);
std::vector<std::uint8_t> encode_seeds(const std::vector<Seed>& seeds);
std::vector<Seed> decode_seeds(std::span<const std::uint8_t> in, const Field& field, std::uint32_t ell_prime);

}  // namespace rmsid::codec

#endif
