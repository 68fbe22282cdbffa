#ifndef MST3_PROFILES_HPP
#define MST3_PROFILES_HPP

// Shipped parameter profiles.
//
//   toy    — GF(3^3), g = x^3 + 2x + 1, types (3,9)/(9,3). Small enough for
//            exhaustive testing and for the attack harness.
//   paper  — GF(3^5), g = x^5 + 2x + 1, types (9,9,3)/(3,9,9). The reference
//            parameter set used by all worked-example vectors.
//   large  — GF(3^81), g = x^81 + x^40 + 2, 17 blocks per signature
//            (sixteen of radix 3^5 plus one of radix 3). An extrapolation:
//            see sizing_report() for the caveats. The generator is not
//            verified primitive at this size (dlog/primitivity checks stop
//            at n = 16) and key files flag it accordingly.

#include <cstdint>
#include <string>

#include "mst3/scheme.hpp"

namespace mst3 {

inline TritVec trits_from_string(const std::string& s) {
    TritVec v;
    v.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '2') fail(errc::format_error, "bad trit character");
        v.push_back(static_cast<Trit>(c - '0'));
    }
    return v;
}

inline SchemeParams make_profile(const std::string& name) {
    if (name == "toy") {
        auto field = make_field(3, trits_from_string("1201"));
        return {field, SignatureType({3, 9}), SignatureType({9, 3})};
    }
    if (name == "paper") {
        auto field = make_field(5, trits_from_string("120001"));
        return {field, SignatureType({9, 9, 3}), SignatureType({3, 9, 9})};
    }
    if (name == "large") {
        // x^81 + x^40 + 2
        TritVec g(82, 0);
        g[0] = 2;
        g[40] = 1;
        g[81] = 1;
        auto field = make_field(81, std::move(g));
        std::vector<std::uint32_t> radices(16, 243);
        radices.push_back(3); // 16*5 + 1 = 81 trits
        return {field, SignatureType(radices), SignatureType(radices)};
    }
    fail(errc::format_error, "unknown profile: " + name);
}

struct SizingReport {
    std::uint64_t quoted_radix = 243;        // r_i = 3^5
    std::uint64_t quoted_blocks = 8;         // s = 8
    std::uint64_t quoted_rows = 8 * 243;     // 1944 rows per signature
    std::string warning;
};

// Arithmetic behind the published "1944 entries" figure for 128-bit sizing,
// together with the inconsistency in that figure. Reported, not resolved:
// the `large` profile is configuration, not a security claim.
inline SizingReport sizing_report() {
    SizingReport r;
    r.warning =
        "The quoted 128-bit sizing (q = 3^80, r_i = 3^5, s = 8) is internally "
        "inconsistent: 3^(5*8) = 3^40 != 3^80, and q must be an odd power "
        "3^(2m+1). Rows per signature s*r_i = 1944 is reproduced as stated, "
        "but no concrete security level is claimed. The `large` profile uses "
        "n = 81 with 17 blocks (16 of radix 3^5, one of radix 3).";
    return r;
}

} // namespace mst3

#endif
