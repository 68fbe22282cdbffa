#ifndef MST3_SERIALIZE_HPP
#define MST3_SERIALIZE_HPP

// Line-oriented text formats for key and ciphertext files, version MST3-REE/1.
// Serialization is deterministic; parse(serialize(x)) is byte-exact.
//
//   MST3-REE/1 public|secret|ciphertext
//   field n=<n> g=<trit string, n+1 chars> generator=verified|unverified
//   type1 <r_1> ... <r_s>          (key files)
//   type2 <r_1> ... <r_s>
//   section <name> [zero_a=0|1]    (cover/signature/translation payloads)
//   block <i> r=<r_i>
//   <one row per line>
//   ...
//   end

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mst3/scheme.hpp"

namespace mst3 {

inline constexpr const char* kFormatVersion = "MST3-REE/1";

namespace detail {

inline std::string next_line(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(errc::format_error, "unexpected end of file");
    return line;
}

inline void expect_line(std::istream& in, const std::string& want) {
    const std::string got = next_line(in);
    if (got != want) fail(errc::format_error, "expected '" + want + "', got '" + got + "'");
}

inline void write_field_header(std::ostream& out, const Field& f) {
    out << "field n=" << f.degree() << " g=";
    for (Trit t : f.modulus()) out << static_cast<char>('0' + t);
    out << " generator=" << (f.generator_verified() ? "verified" : "unverified") << "\n";
}

inline std::shared_ptr<const Field> read_field_header(std::istream& in) {
    std::istringstream ls(next_line(in));
    std::string tag, ns, gs, vs;
    ls >> tag >> ns >> gs >> vs;
    if (tag != "field" || ns.rfind("n=", 0) != 0 || gs.rfind("g=", 0) != 0)
        fail(errc::format_error, "bad field header");
    const unsigned n = static_cast<unsigned>(std::stoul(ns.substr(2)));
    const std::string g = gs.substr(2);
    TritVec gv;
    gv.reserve(g.size());
    for (char c : g) {
        if (c < '0' || c > '2') fail(errc::format_error, "bad modulus trit");
        gv.push_back(static_cast<Trit>(c - '0'));
    }
    return make_field(n, std::move(gv));
}

inline void write_type(std::ostream& out, const char* name, const SignatureType& t) {
    out << name;
    for (std::uint32_t r : t.radices()) out << ' ' << r;
    out << "\n";
}

inline SignatureType read_type(std::istream& in, const std::string& name) {
    std::istringstream ls(next_line(in));
    std::string tag;
    ls >> tag;
    if (tag != name) fail(errc::format_error, "expected " + name + " header");
    std::vector<std::uint32_t> radices;
    std::uint32_t r;
    while (ls >> r) radices.push_back(r);
    return SignatureType(std::move(radices));
}

inline void write_cover(std::ostream& out, const char* name, const Cover& cv) {
    out << "section " << name << " zero_a=" << (cv.zero_a() ? 1 : 0) << "\n";
    for (std::size_t i = 0; i < cv.blocks().size(); ++i) {
        out << "block " << (i + 1) << " r=" << cv.type().radix(i) << "\n";
        for (const GroupElement& row : cv.blocks()[i]) out << row.to_string() << "\n";
    }
}

inline Cover read_cover(std::istream& in, const std::string& name, const Field& f,
                        const SignatureType& type) {
    std::istringstream hs(next_line(in));
    std::string tag, nm, za;
    hs >> tag >> nm >> za;
    if (tag != "section" || nm != name || (za != "zero_a=0" && za != "zero_a=1"))
        fail(errc::format_error, "bad section header for " + name);
    std::vector<std::vector<GroupElement>> blocks;
    for (std::size_t i = 0; i < type.block_count(); ++i) {
        std::ostringstream want;
        want << "block " << (i + 1) << " r=" << type.radix(i);
        expect_line(in, want.str());
        std::vector<GroupElement> rows;
        for (std::uint32_t j = 0; j < type.radix(i); ++j)
            rows.push_back(parse_group_element(f, next_line(in)));
        blocks.push_back(std::move(rows));
    }
    return Cover(&f, type, std::move(blocks), za == "zero_a=1");
}

inline void write_logsig(std::ostream& out, const char* name, const LogSignature& ls) {
    out << "section " << name << "\n";
    for (std::size_t i = 0; i < ls.blocks().size(); ++i) {
        out << "block " << (i + 1) << " r=" << ls.type().radix(i) << "\n";
        for (const FieldElement& row : ls.blocks()[i]) out << row.to_string() << "\n";
    }
}

inline LogSignature read_logsig(std::istream& in, const std::string& name, const Field& f,
                                const SignatureType& type) {
    expect_line(in, "section " + name);
    std::vector<std::vector<FieldElement>> blocks;
    for (std::size_t i = 0; i < type.block_count(); ++i) {
        std::ostringstream want;
        want << "block " << (i + 1) << " r=" << type.radix(i);
        expect_line(in, want.str());
        std::vector<FieldElement> rows;
        for (std::uint32_t j = 0; j < type.radix(i); ++j)
            rows.push_back(f.from_string(next_line(in)));
        blocks.push_back(std::move(rows));
    }
    return LogSignature(&f, type, std::move(blocks));
}

inline void write_translations(std::ostream& out, const char* name,
                               const std::vector<GroupElement>& ts) {
    out << "section " << name << "\n";
    for (const GroupElement& t : ts) out << t.to_string() << "\n";
}

inline std::vector<GroupElement> read_translations(std::istream& in, const std::string& name,
                                                   const Field& f, std::size_t count) {
    expect_line(in, "section " + name);
    std::vector<GroupElement> ts;
    for (std::size_t i = 0; i < count; ++i) ts.push_back(parse_group_element(f, next_line(in)));
    return ts;
}

inline void check_version(std::istream& in, const std::string& kind) {
    std::istringstream ls(next_line(in));
    std::string ver, k;
    ls >> ver >> k;
    if (ver != kFormatVersion) fail(errc::format_error, "unsupported format version: " + ver);
    if (k != kind) fail(errc::format_error, "expected a " + kind + " file, got " + k);
}

} // namespace detail

inline void write_public_key(std::ostream& out, const PublicKey& pk) {
    out << kFormatVersion << " public\n";
    detail::write_field_header(out, *pk.params.field);
    detail::write_type(out, "type1", pk.params.type1);
    detail::write_type(out, "type2", pk.params.type2);
    detail::write_cover(out, "alpha1", pk.alpha1);
    detail::write_cover(out, "alpha2", pk.alpha2);
    detail::write_cover(out, "gamma1", pk.gamma1);
    detail::write_cover(out, "gamma2", pk.gamma2);
    out << "end\n";
}

inline PublicKey read_public_key(std::istream& in) {
    detail::check_version(in, "public");
    auto field = detail::read_field_header(in);
    SignatureType t1 = detail::read_type(in, "type1");
    SignatureType t2 = detail::read_type(in, "type2");
    Cover alpha1 = detail::read_cover(in, "alpha1", *field, t1);
    Cover alpha2 = detail::read_cover(in, "alpha2", *field, t2);
    Cover gamma1 = detail::read_cover(in, "gamma1", *field, t1);
    Cover gamma2 = detail::read_cover(in, "gamma2", *field, t2);
    detail::expect_line(in, "end");
    return {{field, std::move(t1), std::move(t2)}, std::move(alpha1), std::move(alpha2),
            std::move(gamma1), std::move(gamma2)};
}

inline void write_private_key(std::ostream& out, const PrivateKey& sk) {
    out << kFormatVersion << " secret\n";
    detail::write_field_header(out, *sk.params.field);
    detail::write_type(out, "type1", sk.params.type1);
    detail::write_type(out, "type2", sk.params.type2);
    detail::write_logsig(out, "beta1", sk.beta1);
    detail::write_logsig(out, "beta2", sk.beta2);
    detail::write_translations(out, "t1", sk.t1);
    detail::write_translations(out, "t2", sk.t2);
    detail::write_cover(out, "alpha1", sk.alpha1);
    detail::write_cover(out, "alpha2", sk.alpha2);
    detail::write_cover(out, "gamma1", sk.gamma1);
    out << "end\n";
}

inline PrivateKey read_private_key(std::istream& in) {
    detail::check_version(in, "secret");
    auto field = detail::read_field_header(in);
    SignatureType t1 = detail::read_type(in, "type1");
    SignatureType t2 = detail::read_type(in, "type2");
    LogSignature beta1 = detail::read_logsig(in, "beta1", *field, t1);
    LogSignature beta2 = detail::read_logsig(in, "beta2", *field, t2);
    auto ts1 = detail::read_translations(in, "t1", *field, t1.block_count() + 1);
    auto ts2 = detail::read_translations(in, "t2", *field, t2.block_count() + 1);
    Cover alpha1 = detail::read_cover(in, "alpha1", *field, t1);
    Cover alpha2 = detail::read_cover(in, "alpha2", *field, t2);
    Cover gamma1 = detail::read_cover(in, "gamma1", *field, t1);
    detail::expect_line(in, "end");
    return {{field, std::move(t1), std::move(t2)}, std::move(beta1), std::move(beta2),
            std::move(ts1), std::move(ts2), std::move(alpha1), std::move(alpha2),
            std::move(gamma1)};
}

inline void write_ciphertext_file(std::ostream& out, const Field& f,
                                  const std::vector<Ciphertext>& blocks) {
    out << kFormatVersion << " ciphertext\n";
    detail::write_field_header(out, f);
    out << "blocks " << blocks.size() << "\n";
    for (const Ciphertext& ct : blocks)
        out << ct.y1.to_string() << ' ' << ct.y2.to_string() << ' ' << ct.y3.to_string() << "\n";
    out << "padding 0x80\n";
    out << "end\n";
}

struct CiphertextFile {
    std::shared_ptr<const Field> field;
    std::vector<Ciphertext> blocks;
};

inline CiphertextFile read_ciphertext_file(std::istream& in) {
    detail::check_version(in, "ciphertext");
    auto field = detail::read_field_header(in);
    std::istringstream bs(detail::next_line(in));
    std::string tag;
    std::size_t count = 0;
    bs >> tag >> count;
    if (tag != "blocks") fail(errc::format_error, "expected blocks header");
    std::vector<Ciphertext> blocks;
    blocks.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::istringstream ls(detail::next_line(in));
        std::string s1, s2, s3;
        ls >> s1 >> s2 >> s3;
        blocks.push_back({parse_group_element(*field, s1), parse_group_element(*field, s2),
                          parse_group_element(*field, s3)});
    }
    detail::expect_line(in, "padding 0x80");
    detail::expect_line(in, "end");
    return {field, std::move(blocks)};
}

} // namespace mst3

#endif
