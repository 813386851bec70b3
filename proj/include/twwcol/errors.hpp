#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace twwcol {

// Search budget exhausted or instance above a configured size limit.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what, std::optional<int> best_upper_bound = std::nullopt)
        : std::runtime_error(what), best_upper_bound_(best_upper_bound) {}

    std::optional<int> best_upper_bound() const { return best_upper_bound_; }

private:
    std::optional<int> best_upper_bound_;
};

// A contraction sequence that does not describe trigraphs G_n..G_1 of its graph.
class InvalidSequenceError : public std::runtime_error {
public:
    InvalidSequenceError(std::size_t step, const std::string& what)
        : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}

    // 1-based index of the first offending merge
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

class DisconnectedGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotCographError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain on which a closed-form bound is stated.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed input file.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

}  // namespace twwcol
