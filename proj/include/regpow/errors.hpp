#ifndef REGPOW_ERRORS_HPP
#define REGPOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace regpow {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax or validation failure in user-facing input. `offset` is the byte
// position in the offending text when known, npos otherwise.
struct ParseError : Error {
    size_t offset;
    ParseError(const std::string& msg, size_t off = std::string::npos)
        : Error(off == std::string::npos ? msg : msg + " (at offset " + std::to_string(off) + ")"),
          offset(off) {}
};

// A resource cap was hit. Never a wrong answer: callers either surface the
// failure or retry with larger budgets.
struct BudgetError : Error {
    std::string kind;  // "degree", "basis", "time", "length"
    BudgetError(const std::string& k, const std::string& msg) : Error("budget exceeded (" + k + "): " + msg), kind(k) {}
};

// An operation refused to return an uncertified number.
struct NotCertifiedError : Error {
    explicit NotCertifiedError(const std::string& msg) : Error("no valid certificate: " + msg) {}
};

struct NotCMError : Error {
    explicit NotCMError(const std::string& msg) : Error("not CM: " + msg) {}
};

}  // namespace regpow

#endif
