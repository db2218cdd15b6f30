#ifndef HOPFQ_ERRORS_HPP
#define HOPFQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfq {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape/dimension mismatches (bad input data, maps to input-error exit code).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Structure-file syntax or reference errors.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A mathematical precondition failed (non-idempotent input, inconsistent
// factorization, builder handed a table that is not a group/loop, ...).
class CheckError : public Error {
public:
    explicit CheckError(const std::string& what) : Error(what) {}
};

} // namespace hopfq

#endif
