#pragma once

#include <stdexcept>
#include <string>

namespace gfc {

// Every failure mode of the library maps to one of these codes.
enum class errc {
    not_prime,
    reducible_modulus,
    degree_mismatch,
    division_by_zero,
    field_mismatch,
    no_such_root,
    not_a_pth_power,
    k_not_coprime_to_p,
    lambda_degenerate,
    genus_too_small,
    curve_mismatch,
    degenerate_transform,
    out_of_range,
    not_in_span,
    wrong_characteristic,
    non_integer,
    parse_error,
    io_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace gfc
