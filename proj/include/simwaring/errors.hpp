#pragma once

#include <stdexcept>
#include <string>

namespace simwaring {

/// Malformed input text (monomial grammar, collection files).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A theorem hypothesis does not hold for the given input.
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or point-set size exceeded its configured cap.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace simwaring
