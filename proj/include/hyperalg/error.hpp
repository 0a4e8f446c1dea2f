#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hyperalg {

// Library error with a stable machine-readable code ("DivisionByZero",
// "SignatureMismatch", "ZeroPolynomial", ...). The CLI maps these to exit
// code 1; tests match on code().
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& detail) {
    throw Error(std::move(code), detail);
}

// Internal invariant violations. These indicate a bug, not bad input.
inline void require_internal(bool ok, const char* what) {
    if (!ok) throw Error("InternalError", what);
}

} // namespace hyperalg
