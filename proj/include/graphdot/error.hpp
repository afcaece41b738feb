#pragma once

#include <stdexcept>
#include <string>

namespace graphdot {

/// Error categories, mapped to distinct process exit codes by the CLI.
enum class errc {
    invalid_input,   // rejected argument values (r = 0, bad basis, ...)
    parse,           // malformed graph6 / edge-list input
    guard,           // operation refused because a size guard was exceeded
    order_mismatch,  // operands must have the same vertex count
};

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

}  // namespace graphdot
