#pragma once

#include <stdexcept>
#include <string>

namespace nmistego {

// Error categories. The numeric values double as CLI exit codes and as the
// status codes of the C API, so keep them stable.
enum class ErrorCode : int {
    capacity_exceeded = 2,
    corrupt_stream = 3,
    bad_image = 4,
    io = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace nmistego
