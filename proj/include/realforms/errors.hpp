#ifndef REALFORMS_ERRORS_HPP
#define REALFORMS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace realforms {

// Domain-level failure with a stable machine-readable code.
// The CLI maps these to exit code 1; codes are part of the output contract.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw DomainError(code, message);
}

}  // namespace realforms

#endif
