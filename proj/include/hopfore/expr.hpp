#ifndef HOPFORE_EXPR_HPP
#define HOPFORE_EXPR_HPP

#include <string>

#include "hopfore/ncpoly.hpp"

namespace hopfore {

/// Expression grammar shared by presentation files and the CLI:
///   - integer literals, '/' for scalar division (so "3/4" is a rational),
///   - the field variable (Q(q) only) by name,
///   - generator names, '^' with (possibly negative) integer exponents,
///   - '*', '+', '-', parentheses,
///   - "(x)" as the tensor separator (binds between '*' and '+').
/// Errors carry kind "ParseError" with a column position; `line` offsets the
/// reported location for callers parsing files.
Element parse_element(const Presentation& p, const std::string& src, int line = 0);
Tensor2 parse_tensor2(const Presentation& p, const std::string& src, int line = 0);
/// Parses an element and requires it to be a multiple of 1.
Scalar parse_scalar(const Presentation& p, const std::string& src, int line = 0);

} // namespace hopfore

#endif
