#pragma once

#include <stdexcept>
#include <string>

namespace seaweed {

enum class ErrorCode {
    Parse = 1,
    Validation = 2,
    Unsupported = 3,
    Internal = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace seaweed
