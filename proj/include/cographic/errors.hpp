#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cographic {

/// Raised when an exhaustive search would exceed a configured size cap.
class CapacityError : public std::runtime_error {
public:
    CapacityError(std::string cap_name, std::size_t limit, std::size_t actual)
        : std::runtime_error("capacity exceeded: " + cap_name + " limit is " +
                             std::to_string(limit) + ", got " + std::to_string(actual)),
          cap_name_(std::move(cap_name)), limit_(limit), actual_(actual) {}

    const std::string& cap_name() const noexcept { return cap_name_; }
    std::size_t limit() const noexcept { return limit_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::string cap_name_;
    std::size_t limit_;
    std::size_t actual_;
};

/// Malformed graph text. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Size caps for the exhaustive enumerations.
struct Limits {
    std::size_t orientation_edges = 20;
    std::size_t poset_edges = 14;
    std::size_t circuit_edges = 20;
    std::size_t poset_elements = 20000;
};

}  // namespace cographic
