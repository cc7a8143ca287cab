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

// rmsid command-line front end. JSON goes to stdout, errors to stderr as
// {"error": kind, "message": text}. Exit codes: 0 ok, 1 domain error,
// 2 usage error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmsid/analysis.hpp"
#include "rmsid/bench.hpp"
#include "rmsid/codec.hpp"
#include "rmsid/plan.hpp"
#include "rmsid/rmid.hpp"
#include "rmsid/wiretap.hpp"

using namespace rmsid;
using codec::Json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    const std::string text = read_text(path);
    return {text.begin(), text.end()};
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::parse_error, "cannot write '" + path + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::parse_error, "cannot write '" + path + "'");
    out << text;
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, what + ": " + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

struct FieldOptions {
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t m = 1;

    void add(CLI::App* app) {
        app->add_option("--q", q, "Field size (prime power)");
        app->add_option("--p", p, "Field characteristic");
        app->add_option("--m", m, "Extension degree")->capture_default_str();
    }

    std::shared_ptr<const Field> resolve() const {
        if (q != 0 && p != 0) {
            auto f = Field::of_order(q);
            if (f->characteristic() != p || f->degree() != m)
                throw UsageError("--q disagrees with --p/--m");
            return f;
        }
        if (q != 0) return Field::of_order(q);
        if (p != 0) return Field::get(p, m);
        throw UsageError("a field is required: --q or --p/--m");
    }

    bool given() const { return q != 0 || p != 0; }
};

struct SeedOption {
    std::optional<std::uint64_t> seed;

    void add(CLI::App* app) { app->add_option("--seed", seed, "Entropy seed for deterministic output"); }

    SeededEntropy make() const { return SeededEntropy(seed ? *seed : fresh_seed()); }
};

void add_config(CLI::App* app) {
    app->add_option("--config", "Key-value config file (p, m, ell, k, n, ell_prime, kappa, epsilon, budget_policy, "
                                "seed); command-line values win");
}

bool names_option(const std::string& token, const CLI::Option& op) {
    const std::string name = token.substr(0, token.find('='));
    if (name.rfind("--", 0) == 0) return op.check_lname(name.substr(2));
    if (name.size() == 2 && name[0] == '-') return op.check_sname(name.substr(1));
    return false;
}

// CLI11 reads config files only at the top level, so a subcommand's --config file is expanded into
// ordinary arguments before parsing. Keys without a matching option are ignored.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
    std::size_t sub_at = 0;
    const CLI::App* sub = nullptr;
    for (; sub_at < args.size(); ++sub_at)
        if ((sub = app.get_subcommand_no_throw(args[sub_at])) != nullptr) break;
    if (sub == nullptr) return args;
    std::string path;
    for (std::size_t i = sub_at + 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (path.empty()) return args;
    std::vector<std::string> injected;
    for (const auto& item : CLI::ConfigTOML().from_file(path)) {
        if (!item.parents.empty() || item.name == "++" || item.name == "--") continue;
        const CLI::Option* op = sub->get_option_no_throw("--" + item.name);
        if (op == nullptr || op->get_lnames().empty()) continue;
        const bool given = std::any_of(args.begin() + static_cast<std::ptrdiff_t>(sub_at) + 1, args.end(),
                                       [&](const std::string& t) { return names_option(t, *op); });
        if (given) continue;
        const std::string flag = "--" + op->get_lnames().front();
        if (op->get_expected_max() == 0) {
            if (!item.inputs.empty() && CLI::detail::to_flag_value(item.inputs.front()) > 0) injected.push_back(flag);
            continue;
        }
        injected.push_back(flag);
        injected.insert(injected.end(), item.inputs.begin(), item.inputs.end());
    }
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_at) + 1, injected.begin(), injected.end());
    return args;
}

std::vector<std::uint8_t> parse_hex(const std::string& hex) {
    if (hex.size() % 2) throw Error(ErrorKind::parse_error, "hex string has odd length");
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const std::string pair = hex.substr(i, 2);
        if (pair.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
            throw Error(ErrorKind::parse_error, "invalid hex digit in '" + pair + "'");
        out.push_back(static_cast<std::uint8_t>(std::stoul(pair, nullptr, 16)));
    }
    return out;
}

Identity load_identity(const std::string& path) { return codec::identity_from_json(parse_json(read_text(path), path)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secret identification with Reed-Muller identification codes and wiretap-encrypted tags"};
    app.require_subcommand(1);

    // gen-identity
    auto* gen = app.add_subcommand("gen-identity", "Random identity, or one injected from bytes");
    FieldOptions gen_field;
    gen_field.add(gen);
    std::uint32_t gen_ell = 0, gen_k = 0, gen_n = 1;
    std::string gen_hex, gen_file;
    SeedOption gen_seed;
    gen->add_option("--ell", gen_ell, "Number of variables")->required();
    gen->add_option("--k", gen_k, "Maximum total degree")->required();
    gen->add_option("--n", gen_n, "Challenges per identification")->capture_default_str();
    auto* hex_opt = gen->add_option("--data-hex", gen_hex, "Identity bytes as hex");
    gen->add_option("--data-file", gen_file, "Identity bytes from a file")->excludes(hex_opt);
    gen_seed.add(gen);
    add_config(gen);

    // challenge
    auto* chal = app.add_subcommand("challenge", "Generate n challenges for an identity");
    std::string chal_identity, chal_binary_out;
    SeedOption chal_seed;
    chal->add_option("--identity", chal_identity, "Identity JSON file")->required();
    chal->add_option("--binary-out,--binary_out", chal_binary_out, "Also write the binary challenge records");
    chal_seed.add(chal);
    add_config(chal);

    // verify
    auto* ver = app.add_subcommand("verify", "Check challenges against an identity");
    std::string ver_identity, ver_input = "-", ver_binary_in;
    ver->add_option("--identity", ver_identity, "Identity JSON file")->required();
    auto* ver_in_opt = ver->add_option("--challenge", ver_input, "Challenge JSON file ('-' for stdin)");
    ver->add_option("--binary-in,--binary_in", ver_binary_in, "Binary challenge records")->excludes(ver_in_opt);
    add_config(ver);

    // encrypt
    auto* enc = app.add_subcommand("encrypt", "Encrypt challenge tags with fresh seeds");
    FieldOptions enc_field;
    enc_field.add(enc);
    std::string enc_input = "-", enc_binary_in, enc_binary_out, enc_seed_file, enc_seed_format = "json";
    std::uint32_t enc_ell = 0, enc_ell_prime = 0;
    std::optional<double> enc_kappa, enc_epsilon;
    SeedOption enc_seed;
    auto* enc_in_opt = enc->add_option("--challenge", enc_input, "Challenge JSON file ('-' for stdin)");
    enc->add_option("--binary-in,--binary_in", enc_binary_in, "Binary challenge records (needs --ell)")
        ->excludes(enc_in_opt);
    enc->add_option("--ell", enc_ell, "Variables, for binary input");
    enc->add_option("--ell-prime,--ell_prime", enc_ell_prime, "Ciphertext length");
    enc->add_option("--kappa", enc_kappa, "Derive the ciphertext length from kappa and epsilon");
    enc->add_option("--epsilon", enc_epsilon, "Per-tag leakage budget for the derived length");
    enc->add_option("--seed-file,--seed_file", enc_seed_file, "Where to write the seeds")->required();
    enc->add_option("--seed-format,--seed_format", enc_seed_format, "json or binary")
        ->check(CLI::IsMember({"json", "binary"}))
        ->capture_default_str();
    enc->add_option("--binary-out,--binary_out", enc_binary_out, "Also write the binary secret records");
    enc_seed.add(enc);
    add_config(enc);

    // decrypt
    auto* dec = app.add_subcommand("decrypt", "Recover tags from secret challenges");
    FieldOptions dec_field;
    dec_field.add(dec);
    std::string dec_input = "-", dec_binary_in, dec_binary_out, dec_seed_file, dec_seed_format = "json";
    std::uint32_t dec_ell = 0, dec_ell_prime = 0;
    auto* dec_in_opt = dec->add_option("--input", dec_input, "Secret challenge JSON file ('-' for stdin)");
    dec->add_option("--binary-in,--binary_in", dec_binary_in, "Binary secret records (needs --ell, --ell-prime)")
        ->excludes(dec_in_opt);
    dec->add_option("--ell", dec_ell, "Variables, for binary input");
    dec->add_option("--ell-prime,--ell_prime", dec_ell_prime, "Ciphertext length, for binary input or seeds");
    dec->add_option("--seed-file,--seed_file", dec_seed_file, "Seeds written by encrypt")->required();
    dec->add_option("--seed-format,--seed_format", dec_seed_format, "json or binary")
        ->check(CLI::IsMember({"json", "binary"}))
        ->capture_default_str();
    dec->add_option("--binary-out,--binary_out", dec_binary_out, "Also write binary challenge records");
    add_config(dec);

    // params
    auto* par = app.add_subcommand("params", "Plan n, leakage budget and ciphertext length");
    FieldOptions par_field;
    par_field.add(par);
    std::uint32_t par_ell = 0, par_k = 0;
    double par_kappa = 0;
    std::optional<double> par_epsilon;
    std::string par_policy = "paper";
    bool par_curve = false;
    std::vector<double> par_kappas;
    par->add_option("--ell", par_ell, "Number of variables");
    par->add_option("--k", par_k, "Maximum total degree");
    par->add_option("--kappa", par_kappa, "Eavesdropper information fraction")->capture_default_str();
    par->add_option("--epsilon", par_epsilon, "Total leakage target (default: the double-RS error)");
    par->add_option("--budget-policy,--budget_policy", par_policy, "paper or additive")
        ->check(CLI::IsMember({"paper", "additive"}))
        ->capture_default_str();
    par->add_flag("--length-curve,--length_curve", par_curve, "CSV of ciphertext length against kappa");
    par->add_option("--kappas", par_kappas, "Kappa grid for --length-curve");
    add_config(par);

    // leakage-bound
    auto* lb = app.add_subcommand("leakage-bound", "Closed-form leakage bounds");
    FieldOptions lb_field;
    lb_field.add(lb);
    std::uint32_t lb_ell_prime = 0;
    std::optional<double> lb_d2, lb_kappa;
    lb->add_option("--ell-prime,--ell_prime", lb_ell_prime, "Ciphertext length")->required();
    auto* d2_opt = lb->add_option("--d2", lb_d2, "Eavesdropper conditional Renyi-2 divergence in bits");
    lb->add_option("--kappa", lb_kappa, "Use d2 = kappa * ell' * log2 q")->excludes(d2_opt);
    add_config(lb);

    // leakage-exact
    auto* le = app.add_subcommand("leakage-exact", "Exact leakage by enumeration");
    FieldOptions le_field;
    le_field.add(le);
    std::uint32_t le_ell_prime = 0;
    std::string le_channel = "symmetric", le_delta = "0";
    bool le_sweep = false;
    le->add_option("--ell-prime,--ell_prime", le_ell_prime, "Ciphertext length");
    le->add_option("--channel", le_channel, "symmetric, erasure, identity or uniform")
        ->check(CLI::IsMember({"symmetric", "erasure", "identity", "uniform", "uniform-noise"}))
        ->capture_default_str();
    le->add_option("--delta", le_delta, "Channel parameter, exact decimal or fraction")->capture_default_str();
    le->add_flag("--sweep", le_sweep, "CSV over q in {2,3}, ell' in {2,3} and the symmetric delta grid");
    add_config(le);

    // capacity-check
    auto* cap = app.add_subcommand("capacity-check", "Capacity ratios for q = 2^(n^2), k = 2^(n^2-n), ell = 2^n");
    std::uint32_t cap_from = 1, cap_to = 0;
    cap->add_option("--n-seq,--n_seq", cap_from, "Sequence index (or first index with --to)")->capture_default_str();
    cap->add_option("--to", cap_to, "Last sequence index");
    add_config(cap);

    // bench
    auto* ben = app.add_subcommand("bench", "Timing CSV over the identity-size grid");
    FieldOptions ben_field;
    ben_field.add(ben);
    std::uint32_t ben_reps = kMinBenchReps, ben_ell = 0, ben_k = 0;
    std::uint64_t ben_max = kBenchMaxCoefficients;
    std::vector<double> ben_kappas = kBenchKappas;
    std::string ben_policy = "paper", ben_out;
    SeedOption ben_seed;
    ben->add_option("--reps", ben_reps, "Timed samples per operation (0 or >= 30)")->capture_default_str();
    ben->add_option("--ell", ben_ell, "Single grid point: variables");
    ben->add_option("--k", ben_k, "Single grid point: degree");
    ben->add_option("--max-coefficients,--max_coefficients", ben_max, "Skip larger identities")
        ->capture_default_str();
    ben->add_option("--kappas", ben_kappas, "Kappa series");
    ben->add_option("--budget-policy,--budget_policy", ben_policy, "paper or additive")
        ->check(CLI::IsMember({"paper", "additive"}))
        ->capture_default_str();
    ben->add_option("--out", ben_out, "CSV file (default stdout)");
    ben_seed.add(ben);
    add_config(ben);

    try {
        std::vector<std::string> args = expand_config(app, std::vector<std::string>(argv + 1, argv + argc));
        std::vector<char*> argv_expanded{argv[0]};
        for (auto& a : args) argv_expanded.push_back(a.data());
        app.parse(static_cast<int>(argv_expanded.size()), argv_expanded.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            IdCodeParams params(gen_field.resolve(), gen_ell, gen_k, gen_n);
            if (!gen_hex.empty()) {
                emit(codec::to_json(identity_from_bytes(parse_hex(gen_hex), params)));
            } else if (!gen_file.empty()) {
                emit(codec::to_json(identity_from_bytes(read_bytes(gen_file), params)));
            } else {
                auto rng = gen_seed.make();
                emit(codec::to_json(Identity::random(params, rng)));
            }
        } else if (*chal) {
            const Identity id = load_identity(chal_identity);
            auto rng = chal_seed.make();
            const MultiChallenge mc = generate_multi(id, rng);
            if (!chal_binary_out.empty()) write_bytes(chal_binary_out, codec::encode_multi(mc));
            emit(codec::to_json(mc));
        } else if (*ver) {
            const Identity id = load_identity(ver_identity);
            const Field& f = id.params().field();
            const MultiChallenge mc =
                ver_binary_in.empty()
                    ? codec::multi_from_json(parse_json(read_text(ver_input), ver_input), f)
                    : codec::decode_multi(read_bytes(ver_binary_in), f, id.params().ell());
            const bool ok = verify_multi(id, mc);
            emit(Json{{"verdict", ok ? "accept" : "reject"}, {"accept", ok}, {"challenges", mc.challenges.size()}});
        } else if (*enc) {
            const auto field = enc_field.resolve();
            MultiChallenge mc;
            if (enc_binary_in.empty()) {
                mc = codec::multi_from_json(parse_json(read_text(enc_input), enc_input), *field);
            } else {
                if (enc_ell == 0) throw UsageError("--binary-in needs --ell");
                mc = codec::decode_multi(read_bytes(enc_binary_in), *field, enc_ell);
            }
            std::uint32_t len = enc_ell_prime;
            if (len == 0) {
                if (!enc_kappa || !enc_epsilon) throw UsageError("give --ell-prime or both --kappa and --epsilon");
                len = min_cipher_length(field->size(), *enc_kappa, *enc_epsilon).ell_prime;
            }
            const SecrecyParams secrecy(field, len, enc_kappa.value_or(0.0));
            auto rng = enc_seed.make();
            std::vector<Seed> seeds;
            for (std::size_t i = 0; i < mc.challenges.size(); ++i) seeds.push_back(sample_seed(rng, secrecy));
            const auto xs = encrypt_tags(mc, seeds, rng);
            std::vector<codec::SecretChallenge> out;
            for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({mc.challenges[i].r, xs[i]});
            if (enc_seed_format == "binary")
                write_bytes(enc_seed_file, codec::encode_seeds(seeds));
            else
                write_text(enc_seed_file, codec::seeds_to_json(seeds).dump() + "\n");
            if (!enc_binary_out.empty()) write_bytes(enc_binary_out, codec::encode_secrets(out));
            emit(codec::secrets_to_json(out));
        } else if (*dec) {
            const auto field = dec_field.resolve();
            std::vector<codec::SecretChallenge> items;
            if (dec_binary_in.empty()) {
                items = codec::secrets_from_json(parse_json(read_text(dec_input), dec_input), *field);
            } else {
                if (dec_ell == 0 || dec_ell_prime == 0) throw UsageError("--binary-in needs --ell and --ell-prime");
                items = codec::decode_secrets(read_bytes(dec_binary_in), *field, dec_ell, dec_ell_prime);
            }
            std::vector<Seed> seeds;
            if (dec_seed_format == "binary") {
                std::uint32_t len = dec_ell_prime;
                if (len == 0 && !items.empty()) len = static_cast<std::uint32_t>(items.front().x.x.size());
                seeds = codec::decode_seeds(read_bytes(dec_seed_file), *field, len);
            } else {
                seeds = codec::seeds_from_json(parse_json(read_text(dec_seed_file), dec_seed_file), *field);
            }
            std::vector<Ciphertext> xs;
            for (const auto& sc : items) xs.push_back(sc.x);
            const auto tags = decrypt_tags(xs, seeds);
            MultiChallenge mc;
            for (std::size_t i = 0; i < tags.size(); ++i) mc.challenges.push_back({items[i].r, tags[i]});
            if (!dec_binary_out.empty()) write_bytes(dec_binary_out, codec::encode_multi(mc));
            emit(codec::to_json(mc));
        } else if (*par) {
            const auto field = par_field.resolve();
            if (par_curve) {
                if (par_kappas.empty())
                    for (int i = 0; i < 20; ++i) par_kappas.push_back(i * 0.05);
                const double eps = par_epsilon.value_or(0.85e-3);
                std::cout << length_curve_csv(field->size(), eps, length_curve(field->size(), eps, par_kappas));
            } else {
                if (par_ell == 0) throw UsageError("params needs --ell and --k");
                emit(to_json(plan(field, par_ell, par_k, par_kappa, parse_budget_policy(par_policy), par_epsilon)));
            }
        } else if (*lb) {
            const auto field = lb_field.resolve();
            const SecrecyParams secrecy(field, lb_ell_prime, lb_kappa.value_or(0.0));
            double d2 = 0;
            if (lb_d2)
                d2 = *lb_d2;
            else if (lb_kappa)
                d2 = *lb_kappa * lb_ell_prime * std::log2(static_cast<double>(field->size()));
            else
                throw UsageError("give --d2 or --kappa");
            Json out = codec::to_json(leakage_bound(secrecy, d2));
            out["d2_bits"] = d2;
            out["q"] = field->size();
            out["ell_prime"] = lb_ell_prime;
            emit(out);
        } else if (*le) {
            auto make_channel = [](const std::string& kind, std::uint64_t q, const Rational& delta) {
                switch (parse_channel_kind(kind)) {
                    case ChannelKind::symmetric: return ChannelModel::symmetric(q, delta);
                    case ChannelKind::erasure: return ChannelModel::erasure(q, delta);
                    case ChannelKind::identity: return ChannelModel::identity(q);
                    default: return ChannelModel::uniform_noise(q);
                }
            };
            if (le_sweep) {
                std::cout << "# leakage-csv v1\nq,ell_prime,delta,kappa_true,exact_max_tv,exact_pairwise_tv,bound_tight,"
                             "bound_simplified\n";
                std::cout.precision(12);
                for (std::uint64_t q : {2, 3})
                    for (std::uint32_t len : {2u, 3u})
                        for (const Rational& delta : {Rational(0), Rational(1, 8), Rational(1, 4), Rational(1, 2),
                                                      Rational(q - 1, q)}) {
                            const auto field = Field::of_order(q);
                            const auto r = exact_leakage(SecrecyParams(field, len), ChannelModel::symmetric(q, delta));
                            std::cout << q << ',' << len << ',' << to_string(delta) << ',' << r.kappa_true << ','
                                      << r.exact_max_tv << ',' << r.exact_pairwise_tv << ',' << r.bound_tight << ','
                                      << r.bound_simplified << '\n';
                        }
            } else {
                const auto field = le_field.resolve();
                if (le_ell_prime == 0) throw UsageError("leakage-exact needs --ell-prime");
                const auto w = make_channel(le_channel, field->size(), parse_rational(le_delta));
                emit(codec::to_json(exact_leakage(SecrecyParams(field, le_ell_prime), w)));
            }
        } else if (*cap) {
            if (cap_to == 0) {
                emit(codec::to_json(capacity_diagnostics(cap_from)));
            } else {
                Json list = Json::array();
                for (std::uint32_t n = cap_from; n <= cap_to; ++n) list.push_back(codec::to_json(capacity_diagnostics(n)));
                emit(list);
            }
        } else if (*ben) {
            const auto field = ben_field.given() ? ben_field.resolve() : Field::get(3, 10);
            std::vector<std::pair<std::uint32_t, std::uint32_t>> grid;
            if (ben_ell != 0)
                grid.emplace_back(ben_ell, ben_k);
            else
                grid = bench_grid(ben_max);
            std::ostringstream csv;
            if (ben_reps > 0) csv << bench_csv_header();
            BenchOptions options;
            options.reps = ben_reps;
            options.seed = ben_seed.seed.value_or(1);
            for (double kappa : ben_kappas)
                for (auto [ell, k] : grid) {
                    const PlanReport p = plan(field, ell, k, kappa, parse_budget_policy(ben_policy));
                    for (const auto& rec : run_bench(p, options)) csv << to_csv(rec);
                }
            if (ben_out.empty())
                std::cout << csv.str();
            else
                write_text(ben_out, csv.str());
        }
    } catch (const UsageError& e) {
        std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}
