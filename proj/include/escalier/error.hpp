#ifndef ESCALIER_ERROR_HPP
#define ESCALIER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace escalier {

// Domain error carrying a stable machine-readable code. The CLI maps the
// code to structured JSON output and an exit status.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
// Codes used across the library.
inline constexpr const char* dimension_mismatch = "dimension_mismatch";
inline constexpr const char* invalid_exponent = "invalid_exponent";
inline constexpr const char* invalid_order = "invalid_order";
inline constexpr const char* zero_polynomial = "zero_polynomial";
inline constexpr const char* not_lower = "not_lower";
inline constexpr const char* invalid_point = "invalid_point";
inline constexpr const char* duplicate_points = "duplicate_points";
inline constexpr const char* empty_input = "empty_input";
inline constexpr const char* degenerate_functional_set = "degenerate_functional_set";
inline constexpr const char* not_a_quotient_basis = "not_a_quotient_basis";
inline constexpr const char* oracle_limit = "oracle_limit";
inline constexpr const char* invalid_description = "invalid_description";
inline constexpr const char* invalid_axis = "invalid_axis";
inline constexpr const char* parse_error = "parse_error";
inline constexpr const char* io_error = "io_error";
}  // namespace errc

}  // namespace escalier

#endif
