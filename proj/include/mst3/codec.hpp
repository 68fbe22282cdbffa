#ifndef MST3_CODEC_HPP
#define MST3_CODEC_HPP

// Byte payload <-> plaintext blocks. A block carries B bytes where B is the
// largest integer with 256^B <= 3^(2n). The payload is padded with one 0x80
// byte and then 0x00 bytes up to a multiple of B (padding is always added).
// Each B-byte chunk, read big-endian as an integer N, is written as 2n base-3
// digits d_0..d_(2n-1) (little-endian); m2 takes digits 0..n-1 and m3 the
// rest.

#include <cstdint>
#include <vector>

#include "mst3/scheme.hpp"

namespace mst3 {

class BlockCodec {
public:
    explicit BlockCodec(const Field* field) : field_(field) {
        // byte length of 3^(2n) determines B: 256^B <= X iff X has > B bytes
        std::vector<std::uint8_t> x{1}; // big-endian
        for (unsigned i = 0; i < 2 * field_->degree(); ++i) {
            unsigned carry = 0;
            for (std::size_t j = x.size(); j-- > 0;) {
                const unsigned v = x[j] * 3u + carry;
                x[j] = static_cast<std::uint8_t>(v & 0xff);
                carry = v >> 8;
            }
            if (carry) x.insert(x.begin(), static_cast<std::uint8_t>(carry));
        }
        bytes_per_block_ = x.size() - 1;
    }

    std::size_t bytes_per_block() const { return bytes_per_block_; }

    std::vector<Plaintext> encode(const std::vector<std::uint8_t>& payload) const {
        std::vector<std::uint8_t> buf = payload;
        buf.push_back(0x80);
        while (buf.size() % bytes_per_block_ != 0) buf.push_back(0x00);

        const unsigned n = field_->degree();
        std::vector<Plaintext> blocks;
        blocks.reserve(buf.size() / bytes_per_block_);
        for (std::size_t pos = 0; pos < buf.size(); pos += bytes_per_block_) {
            std::vector<std::uint8_t> chunk(buf.begin() + pos,
                                            buf.begin() + pos + bytes_per_block_);
            // repeated division by 3 of the big-endian chunk
            TritVec m2(n, 0), m3(n, 0);
            for (unsigned d = 0; d < 2 * n; ++d) {
                unsigned rem = 0;
                for (std::size_t j = 0; j < chunk.size(); ++j) {
                    const unsigned v = rem * 256u + chunk[j];
                    chunk[j] = static_cast<std::uint8_t>(v / 3);
                    rem = v % 3;
                }
                if (d < n)
                    m2[d] = static_cast<Trit>(rem);
                else
                    m3[d - n] = static_cast<Trit>(rem);
            }
            blocks.push_back({field_->element(std::move(m2)), field_->element(std::move(m3))});
        }
        return blocks;
    }

    std::vector<std::uint8_t> decode(const std::vector<Plaintext>& blocks) const {
        const unsigned n = field_->degree();
        std::vector<std::uint8_t> buf;
        buf.reserve(blocks.size() * bytes_per_block_);
        for (const Plaintext& blk : blocks) {
            // N = sum digit_i * 3^i, accumulated big-endian
            std::vector<std::uint8_t> acc(bytes_per_block_, 0);
            for (unsigned d = 2 * n; d-- > 0;) {
                const Trit digit = d < n ? blk.m2.coeff(d) : blk.m3.coeff(d - n);
                unsigned carry = digit;
                for (std::size_t j = acc.size(); j-- > 0;) {
                    const unsigned v = acc[j] * 3u + carry;
                    acc[j] = static_cast<std::uint8_t>(v & 0xff);
                    carry = v >> 8;
                }
                if (carry) fail(errc::block_overflow, "block value exceeds 256^B");
            }
            buf.insert(buf.end(), acc.begin(), acc.end());
        }
        // strip padding: at most B-1 trailing zeros, then the 0x80 marker.
        // The marker always sits in the final block; an all-zero tail block is
        // malformed rather than silently ignored.
        std::size_t zeros = 0;
        while (!buf.empty() && buf.back() == 0x00 && zeros + 1 < bytes_per_block_) {
            buf.pop_back();
            ++zeros;
        }
        if (buf.empty() || buf.back() != 0x80) fail(errc::bad_padding, "padding marker missing");
        buf.pop_back();
        return buf;
    }

private:
    const Field* field_;
    std::size_t bytes_per_block_;
};

} // namespace mst3

#endif
