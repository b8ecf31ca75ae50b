#pragma once

#include <stdexcept>
#include <string>

namespace plateforce {

/// Rejected input: a value violates a type invariant or an operation precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Physically impossible configuration (plates in contact, value outside a curve's domain).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Text input that could not be parsed. Carries the 1-based line and the offending field.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, int line, std::string field, const std::string& what)
        : std::runtime_error(format(source, line, field, what)),
          source_(std::move(source)), line_(line), field_(std::move(field)) {}

    const std::string& source() const noexcept { return source_; }
    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(const std::string& source, int line, const std::string& field,
                              const std::string& what) {
        std::string out = source;
        if (line > 0) out += ":" + std::to_string(line);
        if (!field.empty()) out += ": '" + field + "'";
        return out + ": " + what;
    }

    std::string source_;
    int line_;
    std::string field_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

inline void require_positive(double value, const char* name) {
    // NaN fails the comparison and is rejected too
    if (!(value > 0.0)) throw InvalidArgument(std::string(name) + " must be > 0, got " + std::to_string(value));
}

inline void require_non_negative(double value, const char* name) {
    if (!(value >= 0.0)) throw InvalidArgument(std::string(name) + " must be >= 0, got " + std::to_string(value));
}

}  // namespace detail
}  // namespace plateforce
