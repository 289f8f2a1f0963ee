#pragma once

// Shared integer type and error hierarchy.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace thompson {

using BigInt = boost::multiprecision::cpp_int;

/// Malformed or non-canonical text input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotReducedError : public DomainError {
public:
    NotReducedError() : DomainError("tree pair diagram is not reduced") {}
};

class NotThinError : public DomainError {
public:
    using DomainError::DomainError;
};

class RefinementDepthError : public DomainError {
public:
    using DomainError::DomainError;
};

namespace detail {

inline std::string to_string(const BigInt& v) { return v.str(); }

// Strict decimal integer: optional '-', digits, no leading '+' or spaces.
inline BigInt parse_integer(std::string_view s, std::string_view what) {
    std::size_t i = 0;
    if (!s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) throw ParseError("expected integer in " + std::string(what) + ": '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw ParseError("expected integer in " + std::string(what) + ": '" + std::string(s) + "'");
    return BigInt(std::string(s));
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
}

} // namespace detail
} // namespace thompson
