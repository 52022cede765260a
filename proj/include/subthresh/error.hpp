#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subthresh {

enum class ErrorKind {
    input,       // malformed or inconsistent user input
    capacity,    // request exceeds a fixed capacity (vertex cap, edge cap, ...)
    infeasible,  // pattern cannot appear in K_n at all
    domain,      // numeric argument outside its domain
};

std::string_view error_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& what) {
    throw Error(ErrorKind::input, what);
}
[[noreturn]] inline void throw_capacity(const std::string& what) {
    throw Error(ErrorKind::capacity, what);
}
[[noreturn]] inline void throw_infeasible(const std::string& what) {
    throw Error(ErrorKind::infeasible, what);
}
[[noreturn]] inline void throw_domain(const std::string& what) {
    throw Error(ErrorKind::domain, what);
}

inline std::string_view error_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::input: return "input_error";
    case ErrorKind::capacity: return "capacity_error";
    case ErrorKind::infeasible: return "infeasible_error";
    case ErrorKind::domain: return "domain_error";
    }
    return "error";
}

} // namespace subthresh
