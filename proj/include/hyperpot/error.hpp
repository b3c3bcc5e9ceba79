#ifndef HYPERPOT_ERROR_HPP
#define HYPERPOT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace hyperpot {

// Domain error with a stable machine-readable code. The CLI maps these to
// {"error":{"code":...,"message":...}} on stderr and exit status 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

} // namespace hyperpot

#endif
