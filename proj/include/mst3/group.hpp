#ifndef MST3_GROUP_HPP
#define MST3_GROUP_HPP

// The unipotent group U(q) = {S(a,b,c) | a,b,c in GF(q)}, q = 3^(2m+1),
// with the twisted product
//   S(a1,b1,c1) S(a2,b2,c2)
//     = S(a1+a2, b1+b2 - a1*a2^(3t), c1+c2 - a2*b1 + a1*a2^(3t+1) - a1^2*a2^(3t))
// where 3t = 3^(m+1), so x^(3t) is a Frobenius power.

#include <string>

#include "mst3/field.hpp"

namespace mst3 {

struct GroupElement {
    FieldElement a, b, c;

    bool operator==(const GroupElement& other) const {
        return a == other.a && b == other.b && c == other.c;
    }
    bool operator!=(const GroupElement& other) const { return !(*this == other); }

    const Field* field() const { return a.field(); }

    // "a:b:c" with each coordinate a trit string
    std::string to_string() const {
        return a.to_string() + ":" + b.to_string() + ":" + c.to_string();
    }
};

inline GroupElement group_identity(const Field& f) { return {f.zero(), f.zero(), f.zero()}; }

inline GroupElement group_mul(const GroupElement& x, const GroupElement& y) {
    const Field& f = *x.field();
    if (!y.field() || !f.same_params(*y.field()))
        fail(errc::params_mismatch, "group elements over different fields");
    const FieldElement y_a3t = f.frobenius_pow(y.a, f.t_exponent_log3());
    FieldElement a = x.a + y.a;
    FieldElement b = x.b + y.b - x.a * y_a3t;
    FieldElement c = x.c + y.c - y.a * x.b + x.a * y_a3t * y.a - x.a * x.a * y_a3t;
    return {std::move(a), std::move(b), std::move(c)};
}

// S(a,b,c)^-1 = S(-a, -b - a^(3t+1), -c - a*b + a^(3t+2))
inline GroupElement group_inv(const GroupElement& x) {
    const Field& f = *x.field();
    const FieldElement a3t = f.frobenius_pow(x.a, f.t_exponent_log3());
    FieldElement a = -x.a;
    FieldElement b = -x.b - a3t * x.a;
    FieldElement c = -x.c - x.a * x.b + a3t * x.a * x.a;
    return {std::move(a), std::move(b), std::move(c)};
}

// The coordinate-shift map S(a,b,c) -> S(0,a,b) used to bind y1 and y2.
inline GroupElement f_map(const GroupElement& x) {
    return {x.field()->zero(), x.a, x.b};
}

inline bool in_center(const GroupElement& x) { return x.a.is_zero() && x.b.is_zero(); }
inline bool in_derived(const GroupElement& x) { return x.a.is_zero(); }

// Smallest k with x^k = identity; always 1, 3 or 9 in U(q).
inline unsigned element_order(const GroupElement& x) {
    const GroupElement id = group_identity(*x.field());
    GroupElement p = x;
    for (unsigned k = 1; k <= 9; ++k) {
        if (p == id) return k;
        p = group_mul(p, x);
    }
    fail(errc::out_of_range, "element order exceeds 9; group law violated");
}

inline GroupElement parse_group_element(const Field& f, const std::string& s) {
    const unsigned n = f.degree();
    if (s.size() != 3 * n + 2 || s[n] != ':' || s[2 * n + 1] != ':')
        fail(errc::format_error, "bad group element string");
    return {f.from_string(s.substr(0, n)), f.from_string(s.substr(n + 1, n)),
            f.from_string(s.substr(2 * n + 2, n))};
}

} // namespace mst3

#endif
