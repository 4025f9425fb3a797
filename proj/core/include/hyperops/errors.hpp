#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperops {

// Root of the library's exception family. The CLI maps subclasses onto its
// exit-code contract: parse/type errors -> 1, domain errors -> 2, budget -> 3.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation would exceed the caller's width or step budget.
class budget_exceeded : public error {
public:
    using error::error;
};

// A partial inverse (exact logarithm, raise, conjugation preimage) was asked
// for a value outside the image.
class not_in_image : public error {
public:
    using error::error;
};

class level_mismatch : public error {
public:
    using error::error;
};

class base_mismatch : public error {
public:
    using error::error;
};

// Binary path operations require identical paths.
class path_mismatch : public error {
public:
    using error::error;
};

// Exponential bases must denote an element outside {0, 1}.
class invalid_base : public error {
public:
    using error::error;
};

class zero_denominator : public error {
public:
    using error::error;
};

class division_by_zero : public error {
public:
    using error::error;
};

// A hereditary term violates the codec invariants.
class malformed_term : public error {
public:
    using error::error;
};

class domain_error : public error {
public:
    using error::error;
};

// A floating-point result left the finite range.
class overflow_error : public error {
public:
    using error::error;
};

class type_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what), offset_(offset) {}

    // Byte offset into the source text.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace hyperops
