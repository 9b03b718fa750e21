#pragma once

#include <stdexcept>
#include <string>

namespace qskel {

// Invalid input from the caller's side: malformed structures, violated preconditions.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text/JSON input. line == 0 when no line information applies.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                                         : what),
          line(line_no) {}
    int line;
};

// An enumeration budget would be exceeded (instance too large for exhaustive work).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A supposedly-unreachable state was reached; always a bug in this library.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line) {
    throw InternalError(std::string("invariant violated: ") + expr + " at " + file + ":" +
                        std::to_string(line));
}
}  // namespace detail

// Always-on invariant check; these guard theorem-backed facts the algorithms rely on,
// so they stay active in release builds.
#define QSKEL_CHECK(expr) \
    ((expr) ? (void)0 : ::qskel::detail::check_failed(#expr, __FILE__, __LINE__))

}  // namespace qskel
