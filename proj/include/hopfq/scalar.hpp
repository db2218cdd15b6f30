#ifndef HOPFQ_SCALAR_HPP
#define HOPFQ_SCALAR_HPP

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace hopfq {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) as long as they are constructed canonically,
// which parse_scalar and the integer constructors guarantee.
using Scalar = mpq_class;

// Parses "p", "p/q" or decimal-free signed integers. Throws ParseError on
// malformed text or zero denominator. Result is canonical.
Scalar parse_scalar(std::string_view text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string scalar_str(const Scalar& value);

} // namespace hopfq

#endif
