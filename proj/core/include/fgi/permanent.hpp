#ifndef FGI_PERMANENT_HPP
#define FGI_PERMANENT_HPP

#include "fgi/matrix.hpp"

namespace fgi {

/// Sum over all permutations; the reference implementation. per(0x0) = 1.
Rational permanent_naive(const Matrix& m);

/// Ryser inclusion-exclusion with Gray-code subset order, O(2^k k).
Rational permanent_ryser(const Matrix& m);

/// Naive below 5x5, Ryser from 5x5 up.
Rational permanent(const Matrix& m);

}  // namespace fgi

#endif  // FGI_PERMANENT_HPP
