#ifndef MST3_FIELD_HPP
#define MST3_FIELD_HPP

// Arithmetic in GF(3^n) = GF(3)[x]/(g(x)) with n = 2m+1 odd.
// Elements are trit vectors in ascending degree order: position 0 is the
// constant term. The canonical textual form is n characters from {0,1,2},
// position 0 first ("01000" is x over GF(3^5)).

#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "mst3/errors.hpp"

namespace mst3 {

using Trit = std::uint8_t;
using TritVec = std::vector<Trit>;

class Field;

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* field, TritVec coeffs)
        : field_(field), coeffs_(std::move(coeffs)) {}

    const Field* field() const { return field_; }
    const TritVec& coeffs() const { return coeffs_; }
    Trit coeff(std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const {
        for (Trit t : coeffs_)
            if (t != 0) return false;
        return true;
    }

    bool operator==(const FieldElement& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement inverse() const;

    std::string to_string() const {
        std::string s;
        s.reserve(coeffs_.size());
        for (Trit t : coeffs_) s.push_back(static_cast<char>('0' + t));
        return s;
    }

private:
    const Field* field_ = nullptr;
    TritVec coeffs_;
};

namespace detail {

// Dense polynomial helpers over GF(3), ascending coefficient order.

inline int poly_degree(const TritVec& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

inline TritVec poly_mul(const TritVec& a, const TritVec& b) {
    TritVec r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<Trit>((r[i + j] + a[i] * b[j]) % 3);
    }
    return r;
}

inline void poly_mod(TritVec& r, const TritVec& g) {
    const int dg = poly_degree(g);
    const Trit lead_inv = (g[dg] == 1) ? 1 : 2; // inverse of the leading trit mod 3
    for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
        if (r[i] == 0) continue;
        const Trit f = static_cast<Trit>((r[i] * lead_inv) % 3);
        for (int j = 0; j <= dg; ++j)
            r[i - dg + j] = static_cast<Trit>((r[i - dg + j] + 3 - f * g[j] % 3) % 3);
    }
    r.resize(dg);
}

inline TritVec poly_mulmod(const TritVec& a, const TritVec& b, const TritVec& g) {
    TritVec r = poly_mul(a, b);
    poly_mod(r, g);
    return r;
}

// gcd of two polynomials over GF(3); result is monic (or zero).
inline TritVec poly_gcd(TritVec a, TritVec b) {
    while (poly_degree(b) >= 0) {
        TritVec r = a;
        // reduce r modulo b
        const int db = poly_degree(b);
        const Trit lead_inv = (b[db] == 1) ? 1 : 2;
        for (int i = poly_degree(r); i >= db; i = poly_degree(r)) {
            const Trit f = static_cast<Trit>((r[i] * lead_inv) % 3);
            for (int j = 0; j <= db; ++j)
                r[i - db + j] = static_cast<Trit>((r[i - db + j] + 3 - f * b[j] % 3) % 3);
        }
        a = std::move(b);
        b = std::move(r);
    }
    const int da = poly_degree(a);
    if (da >= 0 && a[da] == 2)
        for (Trit& t : a) t = static_cast<Trit>((2 * t) % 3);
    return a;
}

} // namespace detail

// Validated parameters of GF(3^n) plus the arithmetic itself. Immutable after
// construction; safe for any number of concurrent readers. Create one and keep
// it alive for as long as its elements exist.
class Field {
public:
    static constexpr unsigned kMaxDlogDegree = 16;

    Field(unsigned n, TritVec g) : n_(n), g_(std::move(g)) {
        if (g_.size() != n_ + 1 || detail::poly_degree(g_) != static_cast<int>(n_))
            fail(errc::non_monic, "modulus must have degree n");
        if (g_[n_] != 1) fail(errc::non_monic, "modulus must be monic");
        if (n_ < 3 || n_ % 2 == 0)
            fail(errc::even_degree, "extension degree must be odd and >= 3");
        for (Trit t : g_)
            if (t > 2) fail(errc::format_error, "modulus trits must be in {0,1,2}");
        if (!is_irreducible())
            fail(errc::not_irreducible, "modulus is reducible over GF(3)");
        m_ = (n_ - 1) / 2;
        if (n_ <= kMaxDlogDegree) {
            if (!generator_is_primitive())
                fail(errc::not_primitive,
                     "x mod g does not generate the multiplicative group; "
                     "choose a different modulus");
            generator_verified_ = true;
        }
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    unsigned degree() const { return n_; }
    unsigned m() const { return m_; }
    // The group law raises to the power 3t = 3^(m+1); this is that exponent's
    // base-3 logarithm, i.e. the number of Frobenius applications.
    unsigned t_exponent_log3() const { return m_ + 1; }
    const TritVec& modulus() const { return g_; }
    bool generator_verified() const { return generator_verified_; }

    // Multiplicative group order 3^n - 1; only representable for n <= 40.
    std::uint64_t order() const {
        if (n_ > 40) fail(errc::field_too_large_for_dlog, "3^n - 1 exceeds 64 bits");
        return pow3(n_) - 1;
    }

    bool same_params(const Field& other) const {
        return this == &other || (n_ == other.n_ && g_ == other.g_);
    }

    FieldElement zero() const { return FieldElement(this, TritVec(n_, 0)); }
    FieldElement one() const {
        TritVec v(n_, 0);
        v[0] = 1;
        return FieldElement(this, v);
    }
    FieldElement generator() const {
        TritVec v(n_, 0);
        v[1] = 1;
        return FieldElement(this, v);
    }

    FieldElement element(TritVec coeffs) const {
        if (coeffs.size() != n_) fail(errc::format_error, "coefficient vector has wrong length");
        for (Trit t : coeffs)
            if (t > 2) fail(errc::format_error, "trits must be in {0,1,2}");
        return FieldElement(this, std::move(coeffs));
    }

    FieldElement from_string(const std::string& s) const {
        if (s.size() != n_) fail(errc::format_error, "trit string has wrong length");
        TritVec v(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (s[i] < '0' || s[i] > '2') fail(errc::format_error, "bad trit character");
            v[i] = static_cast<Trit>(s[i] - '0');
        }
        return FieldElement(this, std::move(v));
    }

    FieldElement add(const FieldElement& x, const FieldElement& y) const {
        check(x), check(y);
        TritVec v(n_);
        for (std::size_t i = 0; i < n_; ++i)
            v[i] = static_cast<Trit>((x.coeff(i) + y.coeff(i)) % 3);
        return FieldElement(this, std::move(v));
    }

    FieldElement sub(const FieldElement& x, const FieldElement& y) const {
        check(x), check(y);
        TritVec v(n_);
        for (std::size_t i = 0; i < n_; ++i)
            v[i] = static_cast<Trit>((x.coeff(i) + 3 - y.coeff(i)) % 3);
        return FieldElement(this, std::move(v));
    }

    FieldElement neg(const FieldElement& x) const {
        check(x);
        TritVec v(n_);
        for (std::size_t i = 0; i < n_; ++i)
            v[i] = static_cast<Trit>((3 - x.coeff(i)) % 3);
        return FieldElement(this, std::move(v));
    }

    FieldElement mul(const FieldElement& x, const FieldElement& y) const {
        check(x), check(y);
        TritVec r = detail::poly_mulmod(x.coeffs(), y.coeffs(), g_);
        r.resize(n_);
        return FieldElement(this, std::move(r));
    }

    FieldElement inv(const FieldElement& x) const {
        check(x);
        if (x.is_zero()) fail(errc::zero_inverse, "zero has no multiplicative inverse");
        // extended Euclid over GF(3)[x]
        TritVec r0 = g_, r1 = x.coeffs();
        TritVec s0(n_ + 1, 0), s1(n_ + 1, 0);
        s1[0] = 1;
        while (detail::poly_degree(r1) > 0) {
            divstep(r0, r1, s0, s1);
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
        // r1 is now a nonzero constant and s1 * x == r1 (mod g)
        const Trit c = r1[0];
        const Trit cinv = (c == 1) ? 1 : 2;
        TritVec v(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            v[i] = static_cast<Trit>((s1[i] * cinv) % 3);
        return FieldElement(this, std::move(v));
    }

    // x^(3^e), computed by e reductions of the Frobenius map. Since x^(3^n) = x
    // the count is reduced mod n first.
    FieldElement frobenius_pow(const FieldElement& x, unsigned e) const {
        check(x);
        FieldElement r = x;
        for (unsigned i = 0, k = e % n_; i < k; ++i) r = mul(mul(r, r), r);
        return r;
    }

    FieldElement pow(const FieldElement& x, std::uint64_t e) const {
        check(x);
        FieldElement r = one(), b = x;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    // alpha^(k mod (3^n - 1)) where alpha is the residue class of x.
    FieldElement primitive_power(std::uint64_t k) const { return pow(generator(), k % order()); }

    // Table-based discrete log of x to base alpha; small fields only.
    std::uint64_t dlog(const FieldElement& x) const {
        check(x);
        if (x.is_zero()) fail(errc::zero_dlog, "dlog of zero is undefined");
        if (n_ > kMaxDlogDegree)
            fail(errc::field_too_large_for_dlog, "dlog table limited to n <= 16");
        std::call_once(dlog_once_, [this] { build_dlog_table(); });
        return dlog_table_.at(x.to_string());
    }

    template <typename Rng>
    FieldElement random_element(Rng& rng, bool nonzero = false) const {
        std::uniform_int_distribution<int> trit(0, 2);
        for (;;) {
            TritVec v(n_);
            for (std::size_t i = 0; i < n_; ++i) v[i] = static_cast<Trit>(trit(rng));
            FieldElement e(this, std::move(v));
            if (!nonzero || !e.is_zero()) return e;
        }
    }

private:
    static std::uint64_t pow3(unsigned k) {
        std::uint64_t r = 1;
        while (k--) r *= 3;
        return r;
    }

    void check(const FieldElement& x) const {
        if (x.field() == this) return;
        if (x.field() == nullptr || !same_params(*x.field()))
            fail(errc::params_mismatch, "element belongs to a different field");
    }

    // One division step of the extended Euclidean algorithm:
    // r0 <- r0 mod r1, s0 <- s0 - quot*s1 (mod g implicitly, degrees stay < n+1).
    static void divstep(TritVec& r0, const TritVec& r1, TritVec& s0, const TritVec& s1) {
        const int d1 = detail::poly_degree(r1);
        const Trit lead_inv = (r1[d1] == 1) ? 1 : 2;
        for (int i = detail::poly_degree(r0); i >= d1; i = detail::poly_degree(r0)) {
            const Trit f = static_cast<Trit>((r0[i] * lead_inv) % 3);
            const int shift = i - d1;
            for (int j = 0; j <= d1; ++j)
                r0[shift + j] = static_cast<Trit>((r0[shift + j] + 3 - f * r1[j] % 3) % 3);
            for (std::size_t j = 0; j + shift < s0.size(); ++j)
                s0[shift + j] = static_cast<Trit>((s0[shift + j] + 3 - f * s1[j] % 3) % 3);
        }
    }

    bool is_irreducible() const {
        if (g_[0] == 0) return false; // divisible by x
        if (n_ <= kMaxDlogDegree) {
            // trial division by every monic polynomial of degree <= n/2
            for (unsigned d = 1; d <= n_ / 2; ++d) {
                TritVec cand(d + 1, 0);
                cand[d] = 1;
                const std::uint64_t count = pow3(d);
                for (std::uint64_t idx = 0; idx < count; ++idx) {
                    std::uint64_t v = idx;
                    for (unsigned i = 0; i < d; ++i) {
                        cand[i] = static_cast<Trit>(v % 3);
                        v /= 3;
                    }
                    TritVec r = g_;
                    detail::poly_mod(r, cand);
                    if (detail::poly_degree(r) < 0) return false;
                }
            }
            return true;
        }
        // For large degrees: g is irreducible iff x^(3^n) == x (mod g) and
        // gcd(x^(3^(n/p)) - x, g) = 1 for every prime p dividing n.
        TritVec x(n_, 0);
        if (n_ >= 2) x[1] = 1;
        auto frob_iter = [&](unsigned k) {
            TritVec h = x;
            for (unsigned i = 0; i < k; ++i)
                h = detail::poly_mulmod(detail::poly_mulmod(h, h, g_), h, g_);
            return h;
        };
        TritVec full = frob_iter(n_);
        if (full != x) return false;
        unsigned rem = n_;
        for (unsigned p = 2; p * p <= n_; ++p) {
            if (rem % p != 0) continue;
            while (rem % p == 0) rem /= p;
            TritVec h = frob_iter(n_ / p);
            for (std::size_t i = 0; i < h.size() && i < x.size(); ++i)
                h[i] = static_cast<Trit>((h[i] + 3 - x[i]) % 3);
            if (detail::poly_degree(detail::poly_gcd(h, g_)) != 0) return false;
        }
        if (rem > 1 && rem != n_) {
            TritVec h = frob_iter(n_ / rem);
            for (std::size_t i = 0; i < h.size() && i < x.size(); ++i)
                h[i] = static_cast<Trit>((h[i] + 3 - x[i]) % 3);
            if (detail::poly_degree(detail::poly_gcd(h, g_)) != 0) return false;
        } else if (rem == n_) {
            // n itself is prime; the only proper subfield exponent is 1
            TritVec h = frob_iter(1);
            for (std::size_t i = 0; i < h.size() && i < x.size(); ++i)
                h[i] = static_cast<Trit>((h[i] + 3 - x[i]) % 3);
            if (detail::poly_degree(detail::poly_gcd(h, g_)) != 0) return false;
        }
        return true;
    }

    bool generator_is_primitive() const {
        const std::uint64_t ord = pow3(n_) - 1;
        // factor ord by trial division (ord <= 3^16 - 1)
        std::vector<std::uint64_t> primes;
        std::uint64_t v = ord;
        for (std::uint64_t p = 2; p * p <= v; ++p) {
            if (v % p) continue;
            primes.push_back(p);
            while (v % p == 0) v /= p;
        }
        if (v > 1) primes.push_back(v);
        const FieldElement alpha = generator();
        for (std::uint64_t p : primes)
            if (pow(alpha, ord / p) == one()) return false;
        return true;
    }

    void build_dlog_table() const {
        const std::uint64_t ord = order();
        dlog_table_.reserve(static_cast<std::size_t>(ord));
        FieldElement e = one();
        const FieldElement alpha = generator();
        for (std::uint64_t k = 0; k < ord; ++k) {
            dlog_table_.emplace(e.to_string(), k);
            e = mul(e, alpha);
        }
    }

    unsigned n_;
    TritVec g_;
    unsigned m_ = 0;
    bool generator_verified_ = false;
    mutable std::once_flag dlog_once_;
    mutable std::unordered_map<std::string, std::uint64_t> dlog_table_;
};

inline FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    return field_->add(*this, rhs);
}
inline FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    return field_->sub(*this, rhs);
}
inline FieldElement FieldElement::operator-() const { return field_->neg(*this); }
inline FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    return field_->mul(*this, rhs);
}
inline FieldElement FieldElement::inverse() const { return field_->inv(*this); }

inline std::shared_ptr<const Field> make_field(unsigned n, TritVec g) {
    return std::make_shared<const Field>(n, std::move(g));
}

} // namespace mst3

#endif
