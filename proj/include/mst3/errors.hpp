#ifndef MST3_ERRORS_HPP
#define MST3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mst3 {

enum class errc {
    non_monic,
    even_degree,
    not_irreducible,
    not_primitive,
    params_mismatch,
    zero_inverse,
    zero_dlog,
    field_too_large_for_dlog,
    out_of_range,
    no_matching_row,
    residue_nonzero,
    bad_permutation,
    not_in_u1,
    not_in_u1_result,
    factorization_failed,
    block_overflow,
    bad_padding,
    search_space_too_large,
    format_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace mst3

#endif
