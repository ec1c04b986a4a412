#pragma once

#include <stdexcept>
#include <string>

namespace tropgal {

// Library errors carry a stable machine-readable code alongside the human
// message. The CLI maps these to {"code":..., "message":...} on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* parse = "parse_error";
inline constexpr const char* invalid_move = "invalid_move";
inline constexpr const char* not_found = "not_found";
inline constexpr const char* not_multiedge = "not_multiedge";
inline constexpr const char* isolated_multiedge = "isolated_multiedge";
inline constexpr const char* not_flat = "not_flat";
inline constexpr const char* chain_gap = "chain_gap";
inline constexpr const char* dimension_mismatch = "dimension_mismatch";
inline constexpr const char* codimension_mismatch = "codimension_mismatch";
inline constexpr const char* genericity_exhausted = "genericity_exhausted";
inline constexpr const char* not_full_rank = "not_full_rank";
inline constexpr const char* precondition = "precondition_failed";
inline constexpr const char* unknown_node = "unknown_node";
inline constexpr const char* internal = "internal_error";
} // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw Error(code, message);
}

} // namespace tropgal
