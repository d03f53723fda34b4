#ifndef STRINGY_ERRORS_HPP
#define STRINGY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stringy {

/// Failure categories surfaced by the library. Each maps to one named
/// error condition of the public operations.
enum class errc {
    non_square,
    zero_vector,
    no_solution,
    not_unique,
    dependent_generators,
    not_a_fan,
    mixed_dimensions,
    ray_outside_support,
    ray_already_present,
    not_q_gorenstein,
    outside_support,
    origin_not_interior,
    not_reflexive,
    support_fn_undefined,
    bad_index,
    pole_at_one,
    fractional_exponent_unresolvable,
    parse_error,
    validation_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace stringy

#endif
