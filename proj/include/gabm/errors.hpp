#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gabm {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- component graph ---

class CycleError : public Error {
public:
    explicit CycleError(std::vector<std::string> cycle)
        : Error("dependency cycle: " + join(cycle)), cycle_(std::move(cycle)) {}
    const std::vector<std::string>& cycle() const { return cycle_; }

private:
    static std::string join(const std::vector<std::string>& ids) {
        std::string out;
        for (const auto& id : ids) {
            if (!out.empty()) out += " -> ";
            out += id;
        }
        return out;
    }
    std::vector<std::string> cycle_;
};

class UnknownDependencyError : public Error {
public:
    UnknownDependencyError(const std::string& component, const std::string& missing)
        : Error("component '" + component + "' depends on unknown component '" + missing + "'"),
          missing_(missing) {}
    const std::string& missing() const { return missing_; }

private:
    std::string missing_;
};

class TemplateError : public Error {
public:
    explicit TemplateError(const std::string& placeholder)
        : Error("unresolved placeholder {" + placeholder + "}"), placeholder_(placeholder) {}
    const std::string& placeholder() const { return placeholder_; }

private:
    std::string placeholder_;
};

class MissingStateError : public Error {
public:
    explicit MissingStateError(const std::string& component)
        : Error("no state for component '" + component + "'"), component_(component) {}
    const std::string& component() const { return component_; }

private:
    std::string component_;
};

class UnparseableDecisionError : public Error {
public:
    UnparseableDecisionError(const std::string& question, std::vector<std::string> attempts)
        : Error("could not parse a decision for: " + question),
          attempts_(std::move(attempts)) {}
    const std::vector<std::string>& attempts() const { return attempts_; }

private:
    std::vector<std::string> attempts_;
};

// --- backends ---

class BackendError : public Error {
public:
    using Error::Error;
};

class AuthError : public BackendError {
public:
    using BackendError::BackendError;
};

class RateLimitedError : public BackendError {
public:
    using BackendError::BackendError;
};

class TransportError : public BackendError {
public:
    using BackendError::BackendError;
};

class EmptyCompletionError : public BackendError {
public:
    using BackendError::BackendError;
};

class CacheMissError : public BackendError {
public:
    explicit CacheMissError(const std::string& key)
        : BackendError("replay cache has no entry for key " + key), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

class ConflictError : public BackendError {
public:
    using BackendError::BackendError;
};

class StorageError : public BackendError {
public:
    using BackendError::BackendError;
};

class UnsupportedQuestionKindError : public BackendError {
public:
    using BackendError::BackendError;
};

// --- validation / games ---

class ValidationError : public Error {
public:
    ValidationError(const std::string& subject, const std::string& field)
        : Error("invalid field '" + field + "' in " + subject), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class BoundsViolationError : public Error {
public:
    using Error::Error;
};

// --- statistics ---

class StatError : public Error {
public:
    using Error::Error;
};

class DegenerateVarianceError : public StatError {
public:
    using StatError::StatError;
};

class ConstantRegressorError : public StatError {
public:
    using StatError::StatError;
};

class ZeroMarginalError : public StatError {
public:
    using StatError::StatError;
};

class InvalidDfError : public StatError {
public:
    using StatError::StatError;
};

// --- harness ---

class ConfigError : public Error {
public:
    using Error::Error;
};

class ConfigMismatchError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class MissingAnalysisError : public Error {
public:
    using Error::Error;
};

} // namespace gabm
