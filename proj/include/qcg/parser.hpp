#ifndef QCG_PARSER_HPP
#define QCG_PARSER_HPP

#include <string>

#include "qcg/wpoly.hpp"

namespace qcg {

// Parses polynomial expressions like "X1^2*X2 - 3/2*q + (1 - X1)^3".
// Variables X1..Xk (or x1, X_1), the deformation parameter q, integer and
// rational literals, +, -, *, ^ and parentheses.
WPolynomial parse_polynomial(const std::string& text, int nvars);

} // namespace qcg

#endif
