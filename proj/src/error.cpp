#include "gfc/error.hpp"

namespace gfc {

const char* errc_name(errc c) {
    switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::no_such_root: return "NoSuchRoot";
    case errc::not_a_pth_power: return "NotAPthPower";
    case errc::k_not_coprime_to_p: return "KNotCoprimeToP";
    case errc::lambda_degenerate: return "LambdaDegenerate";
    case errc::genus_too_small: return "GenusTooSmall";
    case errc::curve_mismatch: return "CurveMismatch";
    case errc::degenerate_transform: return "DegenerateTransform";
    case errc::out_of_range: return "OutOfRange";
    case errc::not_in_span: return "NotInSpan";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::non_integer: return "NonInteger";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace gfc
