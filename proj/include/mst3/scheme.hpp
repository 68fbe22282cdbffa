#ifndef MST3_SCHEME_HPP
#define MST3_SCHEME_HPP

// The MST3 cryptosystem over U(q):
//   key generation  — tame signatures beta_1, beta_2; random covers alpha_1
//                     (all coordinates nonzero) and alpha_2 (a = 0); secret
//                     translations t_0(k)..t_s(k) in U(q)\Z with
//                     t_s(1) = t_0(2); public arrays
//                     gamma_k[i][j] = t_{i-1}(k)^-1 * f(alpha_k[i][j])
//                                     * emb_k(beta_k[i][j]) * t_i(k)
//                     with emb_1(b) = S(0,b,0) and emb_2(b) = S(0,0,b).
//   encryption      — y1 = alpha_1'(R1) alpha_2'(R2) m,
//                     y2 = gamma_1'(R1) gamma_2'(R2), y3 = f(alpha_2'(R2)).
//   decryption      — recover R1 from the b-coordinate of f(y1)^-1 * D1 with
//                     D1 = t_0(1) y2 t_s(2)^-1, strip gamma_1'(R1), recover R2
//                     from the c-coordinate of D2 * y3^-1, then
//                     m = alpha_2'(R2)^-1 alpha_1'(R1)^-1 y1.

#include <memory>
#include <utility>

#include "mst3/logsig.hpp"

namespace mst3 {

struct SchemeParams {
    std::shared_ptr<const Field> field;
    SignatureType type1; // coordinate b
    SignatureType type2; // coordinate c
};

// The message space is U1(q): elements S(0, m2, m3).
struct Plaintext {
    FieldElement m2, m3;

    GroupElement to_group() const { return {m2.field()->zero(), m2, m3}; }
    bool operator==(const Plaintext& o) const { return m2 == o.m2 && m3 == o.m3; }
    bool operator!=(const Plaintext& o) const { return !(*this == o); }
};

struct Ciphertext {
    GroupElement y1, y2, y3;
};

struct Randomness {
    FactorIndex r1, r2;
};

struct PublicKey {
    SchemeParams params;
    Cover alpha1;  // zero_a = false
    Cover alpha2;  // zero_a = true
    Cover gamma1;  // same type as beta1/alpha1
    Cover gamma2;
};

// Decryption also walks gamma_1 and strips both covers, so the private key
// keeps its own copies of those public tables and is self-contained.
struct PrivateKey {
    SchemeParams params;
    LogSignature beta1, beta2;
    std::vector<GroupElement> t1; // t_0(1)..t_s(1)
    std::vector<GroupElement> t2; // t_0(2)..t_s(2); t1.back() == t2.front()
    Cover alpha1;
    Cover alpha2;
    Cover gamma1;
};

namespace detail {

inline GroupElement embed_b(const FieldElement& b) { return {b.field()->zero(), b, b.field()->zero()}; }
inline GroupElement embed_c(const FieldElement& c) { return {c.field()->zero(), c.field()->zero(), c}; }

template <typename Rng>
GroupElement random_noncentral(const Field& f, Rng& rng) {
    for (;;) {
        GroupElement g{f.random_element(rng), f.random_element(rng), f.random_element(rng)};
        if (!in_center(g)) return g;
    }
}

inline Cover make_gamma(const Cover& alpha, const LogSignature& beta,
                        const std::vector<GroupElement>& t, bool second) {
    std::vector<std::vector<GroupElement>> blocks;
    blocks.reserve(alpha.blocks().size());
    for (std::size_t i = 0; i < alpha.blocks().size(); ++i) {
        std::vector<GroupElement> rows;
        rows.reserve(alpha.blocks()[i].size());
        for (std::size_t j = 0; j < alpha.blocks()[i].size(); ++j) {
            const GroupElement emb = second ? embed_c(beta.blocks()[i][j])
                                            : embed_b(beta.blocks()[i][j]);
            rows.push_back(group_mul(
                group_mul(group_mul(group_inv(t[i]), f_map(alpha.blocks()[i][j])), emb), t[i + 1]));
        }
        blocks.push_back(std::move(rows));
    }
    return Cover(alpha.field(), alpha.type(), std::move(blocks), false);
}

} // namespace detail

template <typename Rng>
std::pair<PublicKey, PrivateKey> keygen(const SchemeParams& params, Rng& rng) {
    const Field& f = *params.field;
    LogSignature beta1 = generate_tame(f, params.type1, rng);
    LogSignature beta2 = generate_tame(f, params.type2, rng);
    Cover alpha1 = generate_cover(f, params.type1, rng, false);
    Cover alpha2 = generate_cover(f, params.type2, rng, true);

    std::vector<GroupElement> t1, t2;
    for (std::size_t i = 0; i <= params.type1.block_count(); ++i)
        t1.push_back(detail::random_noncentral(f, rng));
    t2.push_back(t1.back()); // chaining: t_s(1) = t_0(2)
    for (std::size_t i = 1; i <= params.type2.block_count(); ++i)
        t2.push_back(detail::random_noncentral(f, rng));

    Cover gamma1 = detail::make_gamma(alpha1, beta1, t1, false);
    Cover gamma2 = detail::make_gamma(alpha2, beta2, t2, true);

    PublicKey pk{params, alpha1, alpha2, gamma1, gamma2};
    PrivateKey sk{params, std::move(beta1), std::move(beta2), std::move(t1), std::move(t2),
                  std::move(alpha1), std::move(alpha2), std::move(gamma1)};
    return {std::move(pk), std::move(sk)};
}

template <typename Rng>
Randomness sample_randomness(const SchemeParams& params, Rng& rng) {
    auto draw = [&rng](const SignatureType& type) {
        FactorIndex idx;
        idx.digits.reserve(type.block_count());
        for (std::size_t i = 0; i < type.block_count(); ++i) {
            std::uniform_int_distribution<std::uint32_t> d(0, type.radix(i) - 1);
            idx.digits.push_back(d(rng));
        }
        return idx;
    };
    return {draw(params.type1), draw(params.type2)};
}

inline Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, const Randomness& r) {
    const GroupElement a1 = pk.alpha1.evaluate(r.r1);
    const GroupElement a2 = pk.alpha2.evaluate(r.r2);
    GroupElement y1 = group_mul(group_mul(a1, a2), m.to_group());
    GroupElement y2 = group_mul(pk.gamma1.evaluate(r.r1), pk.gamma2.evaluate(r.r2));
    GroupElement y3 = f_map(a2);
    return {std::move(y1), std::move(y2), std::move(y3)};
}

// Intermediates of a decryption, exposed for the demo/replay path.
struct DecryptTrace {
    GroupElement d1, dstar1, y2_stripped, d2, dstar2;
    FactorIndex r1, r2;
};

inline Plaintext decrypt(const PrivateKey& sk, const Ciphertext& ct, DecryptTrace* trace = nullptr) {
    try {
        const GroupElement d1 =
            group_mul(group_mul(sk.t1.front(), ct.y2), group_inv(sk.t2.back()));
        const GroupElement dstar1 = group_mul(group_inv(f_map(ct.y1)), d1);
        const FactorIndex r1 = sk.beta1.factorize(dstar1.b);

        const GroupElement y2s = group_mul(group_inv(sk.gamma1.evaluate(r1)), ct.y2);
        const GroupElement d2 =
            group_mul(group_mul(sk.t2.front(), y2s), group_inv(sk.t2.back()));
        const GroupElement dstar2 = group_mul(d2, group_inv(ct.y3));
        const FactorIndex r2 = sk.beta2.factorize(dstar2.c);

        const GroupElement m =
            group_mul(group_inv(sk.alpha2.evaluate(r2)),
                      group_mul(group_inv(sk.alpha1.evaluate(r1)), ct.y1));
        if (!m.a.is_zero())
            fail(errc::not_in_u1_result, "recovered message lies outside U1");
        if (trace) *trace = {d1, dstar1, y2s, d2, dstar2, r1, r2};
        return {m.b, m.c};
    } catch (const error& e) {
        if (e.code() == errc::no_matching_row || e.code() == errc::residue_nonzero)
            fail(errc::factorization_failed, "ciphertext does not factorize under this key");
        throw;
    }
}

} // namespace mst3

#endif
