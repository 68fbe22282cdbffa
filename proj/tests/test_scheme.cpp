#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <utility>

#include "mst3/paper_example.hpp"
#include "mst3/profiles.hpp"

using namespace mst3;

namespace {

GroupElement S(const Field& f, int ka, int kb, int kc) {
    auto p = [&](int k) { return k < 0 ? f.zero() : f.primitive_power(std::uint64_t(k)); };
    return {p(ka), p(kb), p(kc)};
}

Randomness rand_of(const SchemeParams& sp, std::uint64_t r1, std::uint64_t r2) {
    return {mixed_radix_decode(r1, sp.type1), mixed_radix_decode(r2, sp.type2)};
}

} // namespace

TEST_CASE("fixture keygen reproduces the gamma tables row for row") {
    const auto fx = paper_example::make_fixture();
    for (std::size_t i = 0; i < fx.pk.gamma1.blocks().size(); ++i)
        for (std::size_t j = 0; j < fx.pk.gamma1.blocks()[i].size(); ++j)
            REQUIRE(fx.pk.gamma1.blocks()[i][j] == fx.gamma1_expected.blocks()[i][j]);
    for (std::size_t i = 0; i < fx.pk.gamma2.blocks().size(); ++i)
        for (std::size_t j = 0; j < fx.pk.gamma2.blocks()[i].size(); ++j)
            REQUIRE(fx.pk.gamma2.blocks()[i][j] == fx.gamma2_expected.blocks()[i][j]);
}

TEST_CASE("reference encryption") {
    const auto fx = paper_example::make_fixture();
    const Field& f = *fx.field;
    const Plaintext m{f.primitive_power(0), f.primitive_power(1)};
    const Ciphertext ct = encrypt(fx.pk, m, rand_of(fx.params, 29, 31));
    CHECK(ct.y1 == S(f, 86, 186, 113));
    CHECK(ct.y2 == S(f, 238, 210, 0));
    CHECK(ct.y3 == S(f, -1, -1, 66));
    CHECK(in_center(ct.y3));
}

TEST_CASE("reference decryption with intermediates") {
    const auto fx = paper_example::make_fixture();
    const Field& f = *fx.field;
    const Plaintext m{f.primitive_power(0), f.primitive_power(1)};
    const Ciphertext ct = encrypt(fx.pk, m, rand_of(fx.params, 29, 31));

    DecryptTrace tr;
    const Plaintext out = decrypt(fx.sk, ct, &tr);
    CHECK(tr.d1 == S(f, -1, 233, 143));
    CHECK(tr.dstar1 == S(f, -1, 2, 176));
    CHECK(tr.y2_stripped == S(f, 18, 154, 151));
    CHECK(tr.d2 == S(f, -1, -1, 8));
    CHECK(tr.dstar2 == S(f, -1, -1, 227));
    CHECK(mixed_radix_encode(tr.r1, fx.params.type1) == 29);
    CHECK(mixed_radix_encode(tr.r2, fx.params.type2) == 31);
    CHECK(out == m);
}

TEST_CASE("encrypting the identity message") {
    const auto fx = paper_example::make_fixture();
    const Field& f = *fx.field;
    const Randomness r = rand_of(fx.params, 29, 31);
    const Ciphertext ct = encrypt(fx.pk, Plaintext{f.zero(), f.zero()}, r);
    CHECK(ct.y1 == group_mul(fx.pk.alpha1.evaluate(r.r1), fx.pk.alpha2.evaluate(r.r2)));
}

TEST_CASE("keygen basics on the toy profile") {
    const SchemeParams sp = make_profile("toy");
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        auto [pk, sk] = keygen(sp, rng);
        for (const GroupElement& t : sk.t1) CHECK_FALSE(in_center(t));
        for (const GroupElement& t : sk.t2) CHECK_FALSE(in_center(t));
        REQUIRE(sk.t1.back() == sk.t2.front());
        CHECK(sk.t1.size() == sp.type1.block_count() + 1);
        CHECK(sk.t2.size() == sp.type2.block_count() + 1);
        CHECK(pk.alpha2.blocks()[0][0].a.is_zero()); // zero_a cover
        CHECK(pk.alpha2.zero_a());
    }
}

TEST_CASE("round trip on random keys and messages") {
    std::mt19937_64 rng(23);

    SECTION("toy profile, sampled") {
        const SchemeParams sp = make_profile("toy");
        auto [pk, sk] = keygen(sp, rng);
        for (int i = 0; i < 500; ++i) {
            const Plaintext m{sp.field->random_element(rng), sp.field->random_element(rng)};
            const Randomness r = sample_randomness(sp, rng);
            REQUIRE(decrypt(sk, encrypt(pk, m, r)) == m);
        }
    }

    SECTION("paper profile, sampled") {
        const SchemeParams sp = make_profile("paper");
        auto [pk, sk] = keygen(sp, rng);
        for (int i = 0; i < 1000; ++i) {
            const Plaintext m{sp.field->random_element(rng), sp.field->random_element(rng)};
            const Randomness r = sample_randomness(sp, rng);
            REQUIRE(decrypt(sk, encrypt(pk, m, r)) == m);
        }
    }

    SECTION("large profile, a few blocks") {
        const SchemeParams sp = make_profile("large");
        auto [pk, sk] = keygen(sp, rng);
        for (int i = 0; i < 3; ++i) {
            const Plaintext m{sp.field->random_element(rng), sp.field->random_element(rng)};
            const Randomness r = sample_randomness(sp, rng);
            REQUIRE(decrypt(sk, encrypt(pk, m, r)) == m);
        }
    }
}

TEST_CASE("telescoping identity binds gamma products to the covers") {
    // t_0(1) gamma1'(R1) gamma2'(R2) t_s(2)^-1 equals the product of the
    // f(alpha)/embedded-beta cores; the translations cancel pairwise across
    // the t_s(1) = t_0(2) seam.
    const SchemeParams sp = make_profile("toy");
    std::mt19937_64 rng(29);
    auto [pk, sk] = keygen(sp, rng);
    const Field& f = *sp.field;
    for (int i = 0; i < 50; ++i) {
        const Randomness r = sample_randomness(sp, rng);
        const GroupElement lhs = group_mul(
            group_mul(sk.t1.front(),
                      group_mul(pk.gamma1.evaluate(r.r1), pk.gamma2.evaluate(r.r2))),
            group_inv(sk.t2.back()));
        GroupElement rhs = group_identity(f);
        for (std::size_t b = 0; b < sp.type1.block_count(); ++b) {
            const std::uint32_t d = r.r1.digits[b];
            rhs = group_mul(rhs, group_mul(f_map(sk.alpha1.blocks()[b][d]),
                                           GroupElement{f.zero(), sk.beta1.blocks()[b][d], f.zero()}));
        }
        for (std::size_t b = 0; b < sp.type2.block_count(); ++b) {
            const std::uint32_t d = r.r2.digits[b];
            rhs = group_mul(rhs, group_mul(f_map(sk.alpha2.blocks()[b][d]),
                                           GroupElement{f.zero(), f.zero(), sk.beta2.blocks()[b][d]}));
        }
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("y3 always lies in the center") {
    const SchemeParams sp = make_profile("toy");
    std::mt19937_64 rng(31);
    auto [pk, sk] = keygen(sp, rng);
    for (int i = 0; i < 100; ++i) {
        const Plaintext m{sp.field->random_element(rng), sp.field->random_element(rng)};
        const Ciphertext ct = encrypt(pk, m, sample_randomness(sp, rng));
        REQUIRE(in_center(ct.y3));
    }
}

TEST_CASE("tampered ciphertext fails cleanly") {
    const SchemeParams sp = make_profile("paper");
    std::mt19937_64 rng(37);
    auto [pk, sk] = keygen(sp, rng);
    const Plaintext m{sp.field->random_element(rng), sp.field->random_element(rng)};
    const Randomness r = sample_randomness(sp, rng);
    const Ciphertext good = encrypt(pk, m, r);

    int wrong = 0, threw = 0;
    for (unsigned pos = 0; pos < sp.field->degree(); ++pos) {
        Ciphertext bad = good;
        TritVec v = bad.y2.b.coeffs();
        v[pos] = static_cast<Trit>((v[pos] + 1) % 3);
        bad.y2.b = sp.field->element(v);
        try {
            const Plaintext out = decrypt(sk, bad);
            if (out != m) ++wrong;
        } catch (const error& e) {
            CHECK((e.code() == errc::factorization_failed || e.code() == errc::not_in_u1_result));
            ++threw;
        }
    }
    CHECK(wrong + threw == static_cast<int>(sp.field->degree())); // never the true message
}

TEST_CASE("sample_randomness is in range, deterministic, and covers the space") {
    const SchemeParams sp = make_profile("toy");
    std::mt19937_64 a(41), b(41);
    for (int i = 0; i < 100; ++i) {
        const Randomness ra = sample_randomness(sp, a);
        const Randomness rb = sample_randomness(sp, b);
        CHECK(ra.r1 == rb.r1);
        CHECK(ra.r2 == rb.r2);
        CHECK(mixed_radix_encode(ra.r1, sp.type1) < 27);
        CHECK(mixed_radix_encode(ra.r2, sp.type2) < 27);
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::mt19937_64 rng(43);
    for (int i = 0; i < 60000 && seen.size() < 729; ++i) {
        const Randomness r = sample_randomness(sp, rng);
        seen.emplace(mixed_radix_encode(r.r1, sp.type1), mixed_radix_encode(r.r2, sp.type2));
    }
    CHECK(seen.size() == 729); // all (R1,R2) pairs reachable
}

TEST_CASE("sizing report") {
    const SizingReport rep = sizing_report();
    CHECK(rep.quoted_rows == 1944);
    CHECK(rep.quoted_rows == rep.quoted_blocks * rep.quoted_radix);
    CHECK_FALSE(rep.warning.empty());
}
