#include "fbns/error.hpp"

namespace fbns {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::domain: return "domain";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::accuracy: return "accuracy";
    case ErrorKind::branch_cut: return "branch-cut";
    case ErrorKind::near_degenerate: return "near-degenerate";
    case ErrorKind::divergence: return "divergence";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace fbns
