#ifndef MST3_LOGSIG_HPP
#define MST3_LOGSIG_HPP

// Tame logarithmic signatures over GF(3^n) and random covers over U(q).
//
// A signature of type (r_1,...,r_s), r_i = 3^(h_i), sum h_i = n, stores s
// blocks of field elements. Row j of block i carries the base-3 digits of j
// (little-endian) at the block's own trit positions, random noise trits at
// all positions below, and zeros above. Factorization peels blocks last to
// first: the running value's trits at block i's positions identify the row.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mst3/group.hpp"

namespace mst3 {

class SignatureType {
public:
    explicit SignatureType(std::vector<std::uint32_t> radices) : radices_(std::move(radices)) {
        if (radices_.empty()) fail(errc::out_of_range, "signature type needs at least one block");
        widths_.reserve(radices_.size());
        offsets_.reserve(radices_.size());
        unsigned off = 0;
        for (std::uint32_t r : radices_) {
            if (r < 3) fail(errc::out_of_range, "block radix must be at least 3");
            unsigned h = 0;
            std::uint32_t v = r;
            while (v % 3 == 0) {
                v /= 3;
                ++h;
            }
            if (v != 1) fail(errc::out_of_range, "block radix must be a power of 3");
            widths_.push_back(h);
            offsets_.push_back(off);
            off += h;
        }
        total_width_ = off;
    }

    std::size_t block_count() const { return radices_.size(); }
    std::uint32_t radix(std::size_t i) const { return radices_[i]; }
    unsigned width(std::size_t i) const { return widths_[i]; }
    unsigned offset(std::size_t i) const { return offsets_[i]; }
    unsigned total_width() const { return total_width_; } // must equal n
    const std::vector<std::uint32_t>& radices() const { return radices_; }

    bool operator==(const SignatureType& o) const { return radices_ == o.radices_; }
    bool operator!=(const SignatureType& o) const { return !(*this == o); }

private:
    std::vector<std::uint32_t> radices_;
    std::vector<unsigned> widths_;
    std::vector<unsigned> offsets_;
    unsigned total_width_ = 0;
};

// Mixed-radix index: digits (R_1,...,R_s) with R = sum_i R_i * prod_{l<i} r_l.
struct FactorIndex {
    std::vector<std::uint32_t> digits;

    bool operator==(const FactorIndex& o) const { return digits == o.digits; }
    bool operator!=(const FactorIndex& o) const { return !(*this == o); }
};

inline FactorIndex mixed_radix_decode(std::uint64_t value, const SignatureType& type) {
    FactorIndex idx;
    idx.digits.reserve(type.block_count());
    std::uint64_t v = value;
    for (std::size_t i = 0; i < type.block_count(); ++i) {
        idx.digits.push_back(static_cast<std::uint32_t>(v % type.radix(i)));
        v /= type.radix(i);
    }
    if (v != 0) fail(errc::out_of_range, "index exceeds the type's range");
    return idx;
}

inline std::uint64_t mixed_radix_encode(const FactorIndex& idx, const SignatureType& type) {
    if (idx.digits.size() != type.block_count())
        fail(errc::out_of_range, "digit count does not match type");
    std::uint64_t v = 0, base = 1;
    for (std::size_t i = 0; i < type.block_count(); ++i) {
        if (idx.digits[i] >= type.radix(i)) fail(errc::out_of_range, "digit out of range");
        v += idx.digits[i] * base;
        base *= type.radix(i);
    }
    return v;
}

class LogSignature {
public:
    LogSignature(const Field* field, SignatureType type,
                 std::vector<std::vector<FieldElement>> blocks)
        : field_(field), type_(std::move(type)), blocks_(std::move(blocks)) {
        if (type_.total_width() != field_->degree())
            fail(errc::out_of_range, "type widths must sum to the field degree");
        if (blocks_.size() != type_.block_count())
            fail(errc::format_error, "block count mismatch");
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i].size() != type_.radix(i))
                fail(errc::format_error, "row count mismatch in block");
    }

    const Field* field() const { return field_; }
    const SignatureType& type() const { return type_; }
    const std::vector<std::vector<FieldElement>>& blocks() const { return blocks_; }

    FieldElement evaluate(const FactorIndex& idx) const {
        if (idx.digits.size() != type_.block_count())
            fail(errc::out_of_range, "digit count does not match type");
        FieldElement v = field_->zero();
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            const std::uint32_t d = idx.digits[i];
            if (d >= type_.radix(i)) fail(errc::out_of_range, "digit out of range");
            v = v + row_by_index(i, d);
        }
        return v;
    }

    // Peel blocks from last to first. The running value's trits at block i's
    // positions select the row (matching is by content, so row permutations
    // within a block do not affect the result).
    FactorIndex factorize(const FieldElement& value) const {
        FieldElement v = value;
        FactorIndex idx;
        idx.digits.assign(type_.block_count(), 0);
        for (std::size_t ii = type_.block_count(); ii-- > 0;) {
            const unsigned off = type_.offset(ii), w = type_.width(ii);
            const FieldElement* match = nullptr;
            for (const FieldElement& row : blocks_[ii]) {
                bool eq = true;
                for (unsigned k = 0; k < w && eq; ++k)
                    eq = row.coeff(off + k) == v.coeff(off + k);
                if (eq) {
                    match = &row;
                    break;
                }
            }
            if (!match) fail(errc::no_matching_row, "no row matches the residue");
            std::uint32_t d = 0;
            for (unsigned k = w; k-- > 0;) d = d * 3 + v.coeff(off + k);
            idx.digits[ii] = d;
            v = v - *match;
        }
        if (!v.is_zero()) fail(errc::residue_nonzero, "nonzero residue after the first block");
        return idx;
    }

    LogSignature permute_block_rows(std::size_t block, const std::vector<std::uint32_t>& perm) const {
        if (block >= blocks_.size()) fail(errc::out_of_range, "no such block");
        const std::size_t r = blocks_[block].size();
        std::vector<bool> seen(r, false);
        if (perm.size() != r) fail(errc::bad_permutation, "permutation has wrong length");
        for (std::uint32_t p : perm) {
            if (p >= r || seen[p]) fail(errc::bad_permutation, "not a permutation");
            seen[p] = true;
        }
        auto blocks = blocks_;
        for (std::size_t j = 0; j < r; ++j) blocks[block][j] = blocks_[block][perm[j]];
        return LogSignature(field_, type_, std::move(blocks));
    }

private:
    // Row whose block-position trits encode digit d (storage order may differ
    // after permutation).
    const FieldElement& row_by_index(std::size_t block, std::uint32_t d) const {
        const unsigned off = type_.offset(block), w = type_.width(block);
        for (const FieldElement& row : blocks_[block]) {
            std::uint32_t rd = 0;
            for (unsigned k = w; k-- > 0;) rd = rd * 3 + row.coeff(off + k);
            if (rd == d) return row;
        }
        fail(errc::no_matching_row, "row with requested index missing");
    }

    const Field* field_;
    SignatureType type_;
    std::vector<std::vector<FieldElement>> blocks_;
};

template <typename Rng>
LogSignature generate_tame(const Field& field, const SignatureType& type, Rng& rng) {
    if (type.total_width() != field.degree())
        fail(errc::out_of_range, "type widths must sum to the field degree");
    std::uniform_int_distribution<int> trit(0, 2);
    std::vector<std::vector<FieldElement>> blocks;
    blocks.reserve(type.block_count());
    for (std::size_t i = 0; i < type.block_count(); ++i) {
        const unsigned off = type.offset(i), w = type.width(i);
        std::vector<FieldElement> rows;
        rows.reserve(type.radix(i));
        for (std::uint32_t j = 0; j < type.radix(i); ++j) {
            TritVec v(field.degree(), 0);
            std::uint32_t d = j;
            for (unsigned k = 0; k < w; ++k) {
                v[off + k] = static_cast<Trit>(d % 3);
                d /= 3;
            }
            for (unsigned k = 0; k < off; ++k) v[k] = static_cast<Trit>(trit(rng)); // noise
            rows.push_back(field.element(std::move(v)));
        }
        blocks.push_back(std::move(rows));
    }
    return LogSignature(&field, type, std::move(blocks));
}

// Cover: an LS-shaped array of group elements without the factorization
// structure. zero_a covers (the alpha_2 role) have a = 0 and nonzero b, c;
// otherwise all three coordinates are nonzero.
class Cover {
public:
    Cover(const Field* field, SignatureType type, std::vector<std::vector<GroupElement>> blocks,
          bool zero_a)
        : field_(field), type_(std::move(type)), blocks_(std::move(blocks)), zero_a_(zero_a) {
        if (blocks_.size() != type_.block_count()) fail(errc::format_error, "block count mismatch");
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i].size() != type_.radix(i))
                fail(errc::format_error, "row count mismatch in block");
    }

    const Field* field() const { return field_; }
    const SignatureType& type() const { return type_; }
    const std::vector<std::vector<GroupElement>>& blocks() const { return blocks_; }
    bool zero_a() const { return zero_a_; }

    // Ordered product of the selected rows, block 1 leftmost.
    GroupElement evaluate(const FactorIndex& idx) const {
        if (idx.digits.size() != type_.block_count())
            fail(errc::out_of_range, "digit count does not match type");
        GroupElement r = group_identity(*field_);
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            const std::uint32_t d = idx.digits[i];
            if (d >= type_.radix(i)) fail(errc::out_of_range, "digit out of range");
            r = group_mul(r, blocks_[i][d]);
        }
        return r;
    }

private:
    const Field* field_;
    SignatureType type_;
    std::vector<std::vector<GroupElement>> blocks_;
    bool zero_a_;
};

template <typename Rng>
Cover generate_cover(const Field& field, const SignatureType& type, Rng& rng, bool zero_a) {
    std::vector<std::vector<GroupElement>> blocks;
    blocks.reserve(type.block_count());
    for (std::size_t i = 0; i < type.block_count(); ++i) {
        std::vector<GroupElement> rows;
        rows.reserve(type.radix(i));
        for (std::uint32_t j = 0; j < type.radix(i); ++j) {
            FieldElement a = zero_a ? field.zero() : field.random_element(rng, true);
            FieldElement b = field.random_element(rng, true);
            FieldElement c = field.random_element(rng, true);
            rows.push_back({std::move(a), std::move(b), std::move(c)});
        }
        blocks.push_back(std::move(rows));
    }
    return Cover(&field, type, std::move(blocks), zero_a);
}

} // namespace mst3

#endif
