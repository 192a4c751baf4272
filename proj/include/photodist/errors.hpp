#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace photodist {

enum class ErrorCode {
    domain,
    range,
    singular_denominator,
    parity,
    pole,
    classification,
    divergent_tail,
    divergent_normalization,
    invalid_spec,
    unnormalized,
    invalid_input,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::range: return "range";
    case ErrorCode::singular_denominator: return "singular_denominator";
    case ErrorCode::parity: return "parity";
    case ErrorCode::pole: return "pole";
    case ErrorCode::classification: return "classification";
    case ErrorCode::divergent_tail: return "divergent_tail";
    case ErrorCode::divergent_normalization: return "divergent_normalization";
    case ErrorCode::invalid_spec: return "invalid_spec";
    case ErrorCode::unnormalized: return "unnormalized";
    case ErrorCode::invalid_input: return "invalid_input";
    }
    return "unknown";
}

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace photodist
