#pragma once

#include <stdexcept>
#include <string>

namespace serpaudit {

// Base class for everything this library throws on purpose.
class AuditError : public std::runtime_error {
public:
    explicit AuditError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input-side failures. These map to CLI exit code 2.
class InputError : public AuditError {
public:
    using AuditError::AuditError;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& msg)
        : InputError(file + ":" + std::to_string(line) + ": " + msg),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public InputError {
public:
    using InputError::InputError;
};

class ConfigError : public InputError {
public:
    using InputError::InputError;
};

class EmptyTitle : public InputError {
public:
    EmptyTitle() : InputError("topic title is empty") {}
};

class UnknownDoc : public InputError {
public:
    explicit UnknownDoc(const std::string& doc_id)
        : InputError("unknown doc_id: " + doc_id) {}
};

// Computation-side failures. These map to CLI exit code 1.
class SampleTooSmall : public AuditError {
public:
    SampleTooSmall(const std::string& label, std::size_t n, std::size_t need)
        : AuditError("sample '" + label + "' has n=" + std::to_string(n) +
                     ", need at least " + std::to_string(need)) {}
};

class ZeroVariance : public AuditError {
public:
    explicit ZeroVariance(const std::string& label)
        : AuditError("sample '" + label + "' has zero variance") {}
};

class ValueOverflow : public AuditError {
public:
    using AuditError::AuditError;
};

class EmptyTopic : public AuditError {
public:
    explicit EmptyTopic(const std::string& topic_id)
        : AuditError("no slates for topic '" + topic_id + "'") {}
};

class IncompleteRun : public AuditError {
public:
    using AuditError::AuditError;
};

}  // namespace serpaudit
