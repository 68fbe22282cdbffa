// mst3 command line tool: keygen / encrypt / decrypt / demo / attack.
//
// Exit codes: 0 success, 1 verification mismatch (incl. decryption failure),
// 2 usage error, 3 file or format error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mst3/attack.hpp"
#include "mst3/codec.hpp"
#include "mst3/paper_example.hpp"
#include "mst3/profiles.hpp"
#include "mst3/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

struct exit_error {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw exit_error{code, message}; }

std::mt19937_64 rng_from_hex(const std::string& hex) {
    if (hex.empty() || hex.size() % 2 != 0 ||
        hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        die(kExitUsage, "seed must be a non-empty even-length hex string");
    std::vector<std::uint32_t> words;
    for (std::size_t i = 0; i < hex.size(); i += 8)
        words.push_back(static_cast<std::uint32_t>(
            std::stoul(hex.substr(i, std::min<std::size_t>(8, hex.size() - i)), nullptr, 16)));
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

std::mt19937_64 make_rng(const std::string& seed_opt) {
    if (!seed_opt.empty()) return rng_from_hex(seed_opt);
    if (const char* env = std::getenv("MST3_SEED"); env && *env) return rng_from_hex(env);
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd(), rd(), rd(), rd(), rd()};
    return std::mt19937_64(seq);
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(kExitFormat, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// write via a temp file + rename so a failure never leaves partial output
void write_file_atomic(const std::string& path, const std::string& data) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) die(kExitFormat, "cannot open " + tmp + " for writing");
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) {
            out.close();
            std::remove(tmp.c_str());
            die(kExitFormat, "short write to " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        die(kExitFormat, "cannot rename " + tmp + " to " + path);
    }
}

template <typename Reader>
auto parse_file(const std::string& path, Reader&& reader) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(kExitFormat, "cannot open " + path);
    try {
        return reader(in);
    } catch (const mst3::error& e) {
        die(kExitFormat, path + ": " + e.what());
    }
}

// "a86" style rendering for the demo (zero coordinate prints as "0")
std::string dlog_str(const mst3::FieldElement& v) {
    if (v.is_zero()) return "0";
    return "a" + std::to_string(v.field()->dlog(v));
}

std::string dlog_triple(const mst3::GroupElement& g) {
    return dlog_str(g.a) + ":" + dlog_str(g.b) + ":" + dlog_str(g.c);
}

int cmd_keygen(const std::string& profile, const std::string& seed, const std::string& out) {
    const mst3::SchemeParams sp = mst3::make_profile(profile);
    if (profile == "large") {
        const mst3::SizingReport rep = mst3::sizing_report();
        std::cout << "large profile: " << rep.quoted_blocks << " blocks of radix "
                  << rep.quoted_radix << " = " << rep.quoted_rows << " rows per signature\n"
                  << "warning: " << rep.warning << "\n";
    }
    std::mt19937_64 rng = make_rng(seed);
    auto [pk, sk] = mst3::keygen(sp, rng);

    std::ostringstream pub, sec;
    mst3::write_public_key(pub, pk);
    mst3::write_private_key(sec, sk);
    write_file_atomic(out + ".pub", pub.str());
    write_file_atomic(out + ".sec", sec.str());
    std::cout << "wrote " << out << ".pub and " << out << ".sec\n";
    return kExitOk;
}

int cmd_encrypt(const std::string& pub_path, const std::string& in_path,
                const std::string& out_path, const std::string& seed, bool insecure_test,
                std::int64_t r1, std::int64_t r2) {
    if ((r1 >= 0 || r2 >= 0) && !insecure_test)
        die(kExitUsage, "--r1/--r2 require --insecure-test");
    if (insecure_test && (r1 < 0 || r2 < 0))
        die(kExitUsage, "--insecure-test requires both --r1 and --r2");

    const mst3::PublicKey pk =
        parse_file(pub_path, [](std::istream& in) { return mst3::read_public_key(in); });
    const std::string payload = read_file_bytes(in_path);
    const mst3::BlockCodec codec(pk.params.field.get());
    const std::vector<mst3::Plaintext> blocks =
        codec.encode({payload.begin(), payload.end()});

    std::mt19937_64 rng = make_rng(seed);
    std::vector<mst3::Ciphertext> cts;
    cts.reserve(blocks.size());
    for (const mst3::Plaintext& m : blocks) {
        mst3::Randomness r = insecure_test
                                 ? mst3::Randomness{mst3::mixed_radix_decode(
                                                        static_cast<std::uint64_t>(r1),
                                                        pk.params.type1),
                                                    mst3::mixed_radix_decode(
                                                        static_cast<std::uint64_t>(r2),
                                                        pk.params.type2)}
                                 : mst3::sample_randomness(pk.params, rng);
        cts.push_back(mst3::encrypt(pk, m, r));
    }
    std::ostringstream out;
    mst3::write_ciphertext_file(out, *pk.params.field, cts);
    write_file_atomic(out_path, out.str());
    std::cout << "encrypted " << payload.size() << " bytes into " << cts.size() << " block(s)\n";
    return kExitOk;
}

int cmd_decrypt(const std::string& sec_path, const std::string& in_path,
                const std::string& out_path) {
    const mst3::PrivateKey sk =
        parse_file(sec_path, [](std::istream& in) { return mst3::read_private_key(in); });
    const mst3::CiphertextFile cf =
        parse_file(in_path, [](std::istream& in) { return mst3::read_ciphertext_file(in); });
    if (cf.field->modulus() != sk.params.field->modulus())
        die(kExitFormat, "ciphertext field does not match the key");

    std::vector<mst3::Plaintext> blocks;
    blocks.reserve(cf.blocks.size());
    try {
        for (const mst3::Ciphertext& ct : cf.blocks) {
            // rebind onto the key's field instance
            const mst3::Field& f = *sk.params.field;
            auto rebind = [&](const mst3::GroupElement& g) {
                return mst3::GroupElement{f.element(g.a.coeffs()), f.element(g.b.coeffs()),
                                          f.element(g.c.coeffs())};
            };
            blocks.push_back(
                mst3::decrypt(sk, {rebind(ct.y1), rebind(ct.y2), rebind(ct.y3)}));
        }
        const mst3::BlockCodec codec(sk.params.field.get());
        const std::vector<std::uint8_t> payload = codec.decode(blocks);
        write_file_atomic(out_path, {payload.begin(), payload.end()});
        std::cout << "decrypted " << payload.size() << " bytes\n";
    } catch (const mst3::error& e) {
        die(kExitMismatch, std::string("decryption failed: ") + e.what());
    }
    return kExitOk;
}

int cmd_demo() {
    using namespace mst3;
    namespace pe = paper_example;
    const auto fx = pe::make_fixture();
    const Field& f = *fx.field;
    int mismatches = 0;

    auto show = [&](const char* label, const GroupElement& got, const pe::PowTriple& want) {
        const GroupElement expect = pe::element(f, want);
        const bool ok = got == expect;
        if (!ok) ++mismatches;
        std::cout << label << " = " << dlog_triple(got) << (ok ? " ... OK" : " ... MISMATCH")
                  << (ok ? "" : " (expected " + dlog_triple(expect) + ")") << "\n";
    };

    const Randomness r{mixed_radix_decode(pe::kR1, fx.params.type1),
                       mixed_radix_decode(pe::kR2, fx.params.type2)};
    std::cout << "R = (" << pe::kR1 << ", " << pe::kR2 << ")\n";
    show("gamma1(29)", fx.pk.gamma1.evaluate(r.r1), pe::kGamma1At29);
    show("gamma2(31)", fx.pk.gamma2.evaluate(r.r2), pe::kGamma2At31);

    const Plaintext m{f.primitive_power(0), f.primitive_power(1)};
    const Ciphertext ct = encrypt(fx.pk, m, r);
    show("y1", ct.y1, pe::kY1);
    show("y2", ct.y2, pe::kY2);
    show("y3", ct.y3, pe::kY3);

    DecryptTrace tr;
    const Plaintext out = decrypt(fx.sk, ct, &tr);
    show("D1", tr.d1, pe::kD1);
    show("D1*", tr.dstar1, pe::kDstar1);
    show("y2'", tr.y2_stripped, pe::kY2Stripped);
    show("D2", tr.d2, pe::kD2);
    show("D2*", tr.dstar2, pe::kDstar2);

    const std::uint64_t rr1 = mixed_radix_encode(tr.r1, fx.params.type1);
    const std::uint64_t rr2 = mixed_radix_encode(tr.r2, fx.params.type2);
    const bool r_ok = rr1 == pe::kR1 && rr2 == pe::kR2;
    if (!r_ok) ++mismatches;
    std::cout << "recovered R = (" << rr1 << ", " << rr2 << ")"
              << (r_ok ? " ... OK" : " ... MISMATCH") << "\n";
    show("recovered m", out.to_group(), pe::kMessage);

    if (mismatches) {
        std::cout << mismatches << " mismatch(es)\n";
        return kExitMismatch;
    }
    std::cout << "all values match the published worked example\n";
    return kExitOk;
}

int cmd_attack(const std::string& which, const std::string& pub_path, const std::string& ct_path,
               const std::string& sec_path, const std::string& csv_path) {
    const mst3::PublicKey pk =
        parse_file(pub_path, [](std::istream& in) { return mst3::read_public_key(in); });
    const mst3::CiphertextFile cf =
        parse_file(ct_path, [](std::istream& in) { return mst3::read_ciphertext_file(in); });
    if (cf.blocks.empty()) die(kExitFormat, "ciphertext file has no blocks");

    // attack the first block; rebind onto the key's field instance
    const mst3::Field& f = *pk.params.field;
    auto rebind = [&](const mst3::GroupElement& g) {
        return mst3::GroupElement{f.element(g.a.coeffs()), f.element(g.b.coeffs()),
                                  f.element(g.c.coeffs())};
    };
    const mst3::Ciphertext ct{rebind(cf.blocks[0].y1), rebind(cf.blocks[0].y2),
                              rebind(cf.blocks[0].y3)};

    mst3::AttackReport rep;
    try {
        if (which == "pair") {
            rep = mst3::brute_force_r_pair(pk, ct);
        } else if (which == "split") {
            rep = mst3::brute_force_split(pk, ct);
        } else { // tkey
            if (sec_path.empty()) die(kExitUsage, "attack tkey requires --sec");
            const mst3::PrivateKey sk = parse_file(
                sec_path, [](std::istream& in) { return mst3::read_private_key(in); });
            rep = mst3::brute_force_t(pk, ct, sk.beta1, sk.beta2);
        }
    } catch (const mst3::error& e) {
        die(kExitMismatch, std::string("attack aborted: ") + e.what());
    }

    mst3::write_report_text(std::cout, rep);
    if (!csv_path.empty()) {
        std::ostringstream csv;
        mst3::write_report_csv_header(csv);
        mst3::write_report_csv(csv, rep);
        write_file_atomic(csv_path, csv.str());
    }
    return rep.succeeded ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MST3 public-key scheme over the Sylow 3-subgroup of the small Ree group"};
    app.require_subcommand(1);

    std::string profile = "paper", seed, out_base;
    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    keygen->add_option("--profile", profile, "toy | paper | large")
        ->check(CLI::IsMember({"toy", "paper", "large"}));
    keygen->add_option("--seed", seed, "hex seed (fallback: MST3_SEED env)");
    keygen->add_option("--out", out_base, "output basename (.pub/.sec)")->required();

    std::string pub_path, in_path, out_path, enc_seed;
    std::int64_t r1 = -1, r2 = -1;
    bool insecure_test = false;
    auto* encrypt = app.add_subcommand("encrypt", "encrypt a file");
    encrypt->add_option("--pub", pub_path, "public key file")->required();
    encrypt->add_option("--in", in_path, "input file")->required();
    encrypt->add_option("--out", out_path, "output ciphertext file")->required();
    encrypt->add_option("--seed", enc_seed, "hex seed for randomness (testing)");
    encrypt->add_option("--r1", r1, "fixed R1 (requires --insecure-test)");
    encrypt->add_option("--r2", r2, "fixed R2 (requires --insecure-test)");
    encrypt->add_flag("--insecure-test", insecure_test, "allow fixed per-block randomness");

    std::string sec_path, din_path, dout_path;
    auto* decrypt = app.add_subcommand("decrypt", "decrypt a file");
    decrypt->add_option("--sec", sec_path, "secret key file")->required();
    decrypt->add_option("--in", din_path, "ciphertext file")->required();
    decrypt->add_option("--out", dout_path, "output file")->required();

    bool paper_example = false;
    auto* demo = app.add_subcommand("demo", "replay the published worked example");
    demo->add_flag("--paper-example", paper_example, "run the GF(3^5) walkthrough");

    std::string atk_pub, atk_ct, atk_sec, atk_csv;
    auto* attack = app.add_subcommand("attack", "run a desk-scale attack");
    attack->require_subcommand(1);
    CLI::App* atk_sub[3] = {attack->add_subcommand("pair", "enumerate (R1,R2)"),
                            attack->add_subcommand("split", "two-stage split search"),
                            attack->add_subcommand("tkey", "t-chain search given the betas")};
    for (CLI::App* s : atk_sub) {
        s->add_option("--pub", atk_pub, "public key file")->required();
        s->add_option("--ct", atk_ct, "ciphertext file")->required();
        s->add_option("--csv", atk_csv, "write a CSV report");
    }
    atk_sub[2]->add_option("--sec", atk_sec, "secret key file (source of the betas)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (keygen->parsed()) return cmd_keygen(profile, seed, out_base);
        if (encrypt->parsed())
            return cmd_encrypt(pub_path, in_path, out_path, enc_seed, insecure_test, r1, r2);
        if (decrypt->parsed()) return cmd_decrypt(sec_path, din_path, dout_path);
        if (demo->parsed()) {
            if (!paper_example) die(kExitUsage, "demo requires --paper-example");
            return cmd_demo();
        }
        for (int i = 0; i < 3; ++i)
            if (atk_sub[i]->parsed())
                return cmd_attack(i == 0 ? "pair" : i == 1 ? "split" : "tkey", atk_pub, atk_ct,
                                  atk_sec, atk_csv);
        die(kExitUsage, "no subcommand");
    } catch (const exit_error& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const mst3::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
}
