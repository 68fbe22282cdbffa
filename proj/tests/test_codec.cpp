#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mst3/codec.hpp"
#include "mst3/profiles.hpp"

using namespace mst3;

TEST_CASE("bytes per block") {
    CHECK(BlockCodec(make_profile("toy").field.get()).bytes_per_block() == 1);   // 3^6 = 729
    CHECK(BlockCodec(make_profile("paper").field.get()).bytes_per_block() == 1); // 3^10 = 59049
    CHECK(BlockCodec(make_profile("large").field.get()).bytes_per_block() == 32); // 3^162 > 2^256
}

TEST_CASE("empty payload encodes the padding marker") {
    const SchemeParams sp = make_profile("paper");
    const BlockCodec codec(sp.field.get());
    const auto blocks = codec.encode({});
    REQUIRE(blocks.size() == 1);
    // 128 = 2 + 0*3 + 2*9 + 1*27 + 1*81
    CHECK(blocks[0].m2 == sp.field->from_string("20211"));
    CHECK(blocks[0].m3 == sp.field->zero());
    CHECK(codec.decode(blocks).empty());
}

TEST_CASE("zero chunk gives zero coordinates") {
    const SchemeParams sp = make_profile("paper");
    const BlockCodec codec(sp.field.get());
    const auto blocks = codec.encode({0x00});
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].m2 == sp.field->zero());
    CHECK(blocks[0].m3 == sp.field->zero());
}

TEST_CASE("round trip on random payloads") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> byte(0, 255);
    std::uniform_int_distribution<std::size_t> len(0, 10240);
    for (const char* profile : {"toy", "paper", "large"}) {
        const SchemeParams sp = make_profile(profile);
        const BlockCodec codec(sp.field.get());
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<std::uint8_t> payload(len(rng));
            for (auto& b : payload) b = static_cast<std::uint8_t>(byte(rng));
            REQUIRE(codec.decode(codec.encode(payload)) == payload);
        }
    }
}

TEST_CASE("bad padding is rejected") {
    const SchemeParams sp = make_profile("paper");
    const BlockCodec codec(sp.field.get());
    const Plaintext zero{sp.field->zero(), sp.field->zero()};

    // all-zero final block: no 0x80 marker anywhere
    CHECK_THROWS_MATCHES(codec.decode({zero}), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::bad_padding; }));

    // zero block appended after valid blocks
    auto blocks = codec.encode({0x41, 0x42});
    blocks.push_back(zero);
    CHECK_THROWS_MATCHES(codec.decode(blocks), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::bad_padding; }));
}

TEST_CASE("block overflow is rejected") {
    const SchemeParams sp = make_profile("paper");
    const BlockCodec codec(sp.field.get());
    // all-2 digits encode N = 3^10 - 1 = 59048 >= 256
    const Plaintext big{sp.field->from_string("22222"), sp.field->from_string("22222")};
    CHECK_THROWS_MATCHES(codec.decode({big}), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == errc::block_overflow; }));
}
