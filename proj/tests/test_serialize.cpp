#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "mst3/profiles.hpp"
#include "mst3/serialize.hpp"

using namespace mst3;

TEST_CASE("key file round trip is byte-exact") {
    const SchemeParams sp = make_profile("toy");
    std::mt19937_64 rng(1);
    auto [pk, sk] = keygen(sp, rng);

    std::ostringstream pub1;
    write_public_key(pub1, pk);
    std::istringstream pin(pub1.str());
    const PublicKey pk2 = read_public_key(pin);
    std::ostringstream pub2;
    write_public_key(pub2, pk2);
    CHECK(pub1.str() == pub2.str());

    std::ostringstream sec1;
    write_private_key(sec1, sk);
    std::istringstream sin(sec1.str());
    const PrivateKey sk2 = read_private_key(sin);
    std::ostringstream sec2;
    write_private_key(sec2, sk2);
    CHECK(sec1.str() == sec2.str());

    // a reparsed key pair still decrypts what the original encrypted
    const Plaintext m{sp.field->random_element(rng), sp.field->random_element(rng)};
    const Ciphertext ct = encrypt(pk2, m, sample_randomness(sp, rng));
    CHECK(decrypt(sk2, ct) == m);
}

TEST_CASE("ciphertext file round trip is byte-exact") {
    const SchemeParams sp = make_profile("paper");
    std::mt19937_64 rng(2);
    auto [pk, sk] = keygen(sp, rng);
    std::vector<Ciphertext> blocks;
    for (int i = 0; i < 4; ++i) {
        const Plaintext m{sp.field->random_element(rng), sp.field->random_element(rng)};
        blocks.push_back(encrypt(pk, m, sample_randomness(sp, rng)));
    }

    std::ostringstream out1;
    write_ciphertext_file(out1, *sp.field, blocks);
    std::istringstream in(out1.str());
    const CiphertextFile parsed = read_ciphertext_file(in);
    REQUIRE(parsed.blocks.size() == blocks.size());
    std::ostringstream out2;
    write_ciphertext_file(out2, *parsed.field, parsed.blocks);
    CHECK(out1.str() == out2.str());
}

TEST_CASE("unknown version is rejected") {
    std::istringstream in("MST3-REE/2 public\n");
    CHECK_THROWS_MATCHES(read_public_key(in), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::format_error; }));

    std::istringstream kind("MST3-REE/1 ciphertext\n");
    CHECK_THROWS_AS(read_public_key(kind), error);
}

TEST_CASE("truncated files are rejected") {
    const SchemeParams sp = make_profile("toy");
    std::mt19937_64 rng(3);
    auto [pk, sk] = keygen(sp, rng);
    std::ostringstream out;
    write_public_key(out, pk);
    const std::string full = out.str();
    std::istringstream in(full.substr(0, full.size() / 2));
    CHECK_THROWS_AS(read_public_key(in), error);
}

TEST_CASE("large profile keys flag the unverified generator") {
    const SchemeParams sp = make_profile("large");
    std::mt19937_64 rng(4);
    auto [pk, sk] = keygen(sp, rng);
    std::ostringstream out;
    write_public_key(out, pk);
    CHECK(out.str().find("generator=unverified") != std::string::npos);
}
