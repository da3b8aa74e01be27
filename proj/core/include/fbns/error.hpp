#pragma once

#include <stdexcept>
#include <string>

namespace fbns {

enum class ErrorKind {
    invalid_input,
    domain,
    numerical,
    accuracy,
    branch_cut,
    near_degenerate,
    divergence,
};

const char* to_string(ErrorKind kind);

/// Exception type carrying a machine-readable category.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace fbns
