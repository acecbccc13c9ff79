#pragma once

#include <stdexcept>
#include <string>

namespace countreg {

// Base for all pipeline failures. `error_class()` is the stable,
// machine-parsable tag the CLI prints ("error:<class>: <message>").
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string cls, const std::string& msg)
        : std::runtime_error(msg), cls_(std::move(cls)) {}
    const std::string& error_class() const noexcept { return cls_; }

private:
    std::string cls_;
};

class IoError : public PipelineError {
public:
    explicit IoError(const std::string& msg) : PipelineError("io", msg) {}
};

class SchemaError : public PipelineError {
public:
    explicit SchemaError(const std::string& msg) : PipelineError("schema", msg) {}
};

class ConfigError : public PipelineError {
public:
    explicit ConfigError(const std::string& msg) : PipelineError("config", msg) {}
};

class SingularDesignError : public PipelineError {
public:
    explicit SingularDesignError(const std::string& msg) : PipelineError("singular", msg) {}
};

class DivergenceError : public PipelineError {
public:
    explicit DivergenceError(const std::string& msg) : PipelineError("divergence", msg) {}
};

class DegenerateBinsError : public PipelineError {
public:
    explicit DegenerateBinsError(const std::string& msg) : PipelineError("degenerate", msg) {}
};

class InternalError : public PipelineError {
public:
    explicit InternalError(const std::string& msg) : PipelineError("internal", msg) {}
};

} // namespace countreg
