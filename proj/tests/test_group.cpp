#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mst3/group.hpp"
#include "mst3/paper_example.hpp"

using namespace mst3;

namespace {

std::shared_ptr<const Field> gf243() {
    static auto f = make_field(5, TritVec{1, 2, 0, 0, 0, 1});
    return f;
}

std::shared_ptr<const Field> gf27() {
    static auto f = make_field(3, TritVec{1, 2, 0, 1});
    return f;
}

GroupElement S(const Field& f, int ka, int kb, int kc) {
    auto p = [&](int k) { return k < 0 ? f.zero() : f.primitive_power(std::uint64_t(k)); };
    return {p(ka), p(kb), p(kc)};
}

template <typename Rng>
GroupElement random_elt(const Field& f, Rng& rng) {
    return {f.random_element(rng), f.random_element(rng), f.random_element(rng)};
}

std::vector<GroupElement> all_of_u27() {
    const Field& f = *gf27();
    std::vector<FieldElement> fe;
    for (int i = 0; i < 27; ++i)
        fe.push_back(f.element({Trit(i % 3), Trit(i / 3 % 3), Trit(i / 9 % 3)}));
    std::vector<GroupElement> out;
    out.reserve(27 * 27 * 27);
    for (const auto& a : fe)
        for (const auto& b : fe)
            for (const auto& c : fe) out.push_back({a, b, c});
    return out;
}

} // namespace

TEST_CASE("reference triple product") {
    const Field& f = *gf243();
    const GroupElement r =
        group_mul(group_mul(S(f, 193, 42, 166), S(f, 10, 210, 185)), S(f, 75, 5, 168));
    CHECK(r == S(f, 206, 106, 219));
}

TEST_CASE("center elements multiply by adding c") {
    const Field& f = *gf243();
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        const FieldElement c1 = f.random_element(rng), c2 = f.random_element(rng);
        const GroupElement z = group_mul(GroupElement{f.zero(), f.zero(), c1},
                                         GroupElement{f.zero(), f.zero(), c2});
        CHECK((z == GroupElement{f.zero(), f.zero(), c1 + c2}));
    }
}

TEST_CASE("identity is two-sided neutral") {
    const Field& f = *gf243();
    const GroupElement id = group_identity(f);
    CHECK(group_inv(id) == id);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        const GroupElement x = random_elt(f, rng);
        CHECK(group_mul(id, x) == x);
        CHECK(group_mul(x, id) == x);
    }
}

TEST_CASE("reference inverses") {
    const Field& f = *gf243();
    CHECK(group_inv(S(f, -1, -1, 66)) == S(f, -1, -1, 187));
    CHECK(group_inv(S(f, 206, 106, 219)) == S(f, 85, 171, 11));
}

TEST_CASE("inverse formula on samples at n=5") {
    const Field& f = *gf243();
    const GroupElement id = group_identity(f);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10000; ++i) {
        const GroupElement x = random_elt(f, rng);
        REQUIRE(group_mul(x, group_inv(x)) == id);
        REQUIRE(group_mul(group_inv(x), x) == id);
    }
}

TEST_CASE("inverse formula exhaustively at n=3") {
    const Field& f = *gf27();
    const GroupElement id = group_identity(f);
    for (const GroupElement& x : all_of_u27()) REQUIRE(group_mul(x, group_inv(x)) == id);
}

TEST_CASE("associativity on random triples") {
    const Field& f = *gf243();
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10000; ++i) {
        const GroupElement x = random_elt(f, rng), y = random_elt(f, rng), z = random_elt(f, rng);
        REQUIRE(group_mul(group_mul(x, y), z) == group_mul(x, group_mul(y, z)));
    }
}

TEST_CASE("center elements commute with everything") {
    const Field& f = *gf243();
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const GroupElement x = random_elt(f, rng);
        const GroupElement z{f.zero(), f.zero(), f.random_element(rng)};
        REQUIRE(group_mul(x, z) == group_mul(z, x));
    }
}

TEST_CASE("f_map") {
    const Field& f = *gf243();
    CHECK(f_map(group_identity(f)) == group_identity(f));
    CHECK(f_map(S(f, 86, 186, 113)) == S(f, -1, 86, 186));
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const GroupElement x = random_elt(f, rng);
        CHECK(in_derived(f_map(x)));
        // f o f shifts a into the c slot
        CHECK((f_map(f_map(x)) == GroupElement{f.zero(), f.zero(), x.a}));
    }
    const GroupElement u1{f.zero(), f.random_element(rng), f.random_element(rng)};
    CHECK((f_map(u1) == GroupElement{f.zero(), f.zero(), u1.b}));
}

TEST_CASE("subgroup predicates") {
    const Field& f = *gf243();
    CHECK(in_center(S(f, -1, -1, 5)));
    CHECK(in_derived(S(f, -1, -1, 5)));
    CHECK_FALSE(in_center(S(f, -1, 1, -1)));
    CHECK(in_derived(S(f, -1, 1, -1)));
    CHECK_FALSE(in_center(S(f, 1, -1, -1)));
    CHECK_FALSE(in_derived(S(f, 1, -1, -1)));
}

TEST_CASE("element orders partition U(q) exhaustively at n=3") {
    std::size_t u1_count = 0;
    for (const GroupElement& x : all_of_u27()) {
        const unsigned ord = element_order(x);
        if (x == group_identity(*gf27())) {
            REQUIRE(ord == 1);
        } else if (x.a.is_zero()) {
            REQUIRE(ord == 3);
        } else {
            REQUIRE(ord == 9);
        }
        if (in_derived(x)) ++u1_count;
    }
    CHECK(u1_count == 27 * 27); // |U1(q)| = q^2
}

TEST_CASE("group element parsing round trip") {
    const Field& f = *gf243();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const GroupElement x = random_elt(f, rng);
        CHECK(parse_group_element(f, x.to_string()) == x);
    }
    CHECK_THROWS_AS(parse_group_element(f, "01000:00000"), error);
    CHECK_THROWS_AS(parse_group_element(f, "01000;00000;00000"), error);
}
