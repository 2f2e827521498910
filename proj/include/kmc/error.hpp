#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kmc {

// Domain error with a stable machine-readable code ("NotGCM", "NotDominant", ...).
// The CLI maps these to exit status 1; everything else is a usage or internal error.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string msg)
        : std::runtime_error(code + ": " + msg),
          code_(std::move(code)),
          message_(std::move(msg)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string code_;
    std::string message_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
    throw Error(std::move(code), msg);
}

}  // namespace kmc
