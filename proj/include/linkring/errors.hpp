#pragma once

#include <stdexcept>
#include <string>

namespace linkring {

/// Base class for every error raised by the library. `code()` is the stable
/// identifier written into CLI error documents.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

    /// Internal-error class: a construction the theory says cannot fail did.
    virtual bool internal() const noexcept { return false; }

private:
    std::string code_;
};

/// Malformed input documents (CLI exit status 2).
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error("ParseError", what) {}
};

class dimension_mismatch : public error {
public:
    explicit dimension_mismatch(const std::string& what) : error("DimensionMismatch", what) {}
};

class not_invertible : public error {
public:
    explicit not_invertible(const std::string& what) : error("NotInvertible", what) {}
};

class field_mismatch : public error {
public:
    explicit field_mismatch(const std::string& what) : error("FieldMismatch", what) {}
};

class invalid_argument : public error {
public:
    explicit invalid_argument(const std::string& what) : error("InvalidArgument", what) {}
};

class augmentation_singular : public error {
public:
    explicit augmentation_singular(const std::string& what)
        : error("AugmentationSingular", what) {}
};

class not_near_projection : public error {
public:
    explicit not_near_projection(const std::string& what)
        : error("NotNearProjection", what) {}
};

class zero_determinant : public error {
public:
    explicit zero_determinant(const std::string& what) : error("ZeroDeterminant", what) {}
};

class not_flk : public error {
public:
    explicit not_flk(const std::string& what) : error("NotFlk", what) {}
};

class internal_error : public error {
public:
    internal_error(std::string code, const std::string& what) : error(std::move(code), what) {}
    bool internal() const noexcept override { return true; }
};

}  // namespace linkring
