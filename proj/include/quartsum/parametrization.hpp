#pragma once

#include <array>

#include "quartsum/integer.hpp"
#include "quartsum/quartet.hpp"
#include "quartsum/rational.hpp"

namespace quartsum {

// Tangent construction for A^4 + B^4 = C^4 + D^4.
//
// Writing A = p+q, D = p-q, C = r+s, B = r-s reduces the problem to
//   pq(p^2 + q^2) = rs(r^2 + s^2),
// and p = x, q = b*y, r = k*x, s = y (scale fixed to 1) reduces it further to
//   (y/x)^2 = (k^3 - b) / (b^3 - k).
// Setting k = b(1 + z) turns the right side into R(z) / (b^2 - 1 - z)^2 with
// a quartic R. Choosing sqrt(R) = b^2 - 1 + f z + g z^2 so that the z^0, z^1
// and z^2 terms match leaves a linear equation for z. The parameter b is any
// rational outside {0, 1, -1}.

/// f = (3b^2 - 1) / 2
Rational compute_f(const Rational& b);

/// g = (3b^4 - 18b^2 - 1) / (8(b^2 - 1)); DegenerateParameter for b = +-1.
Rational compute_g(const Rational& b);

/// z = (b^2(b^2 - 4) - 2fg) / (b^2 + g^2); DegenerateParameter for b in {0, 1, -1}.
Rational compute_z(const Rational& b);

/// Coefficients c0..c4 of R(z) = sum c_i z^i.
std::array<Rational, 5> radicand_coeffs(const Rational& b);

/// b^2 - 1 + f z + g z^2, the square root of R chosen by the construction.
Rational radicand_root(const Rational& b, const Rational& z);

struct XY {
  Integer x;
  Integer y;
};

/// Coprime (x, y) with x > 0 and y/x = (b^2 - 1 + fz + gz^2) / (b^2 - 1 - z).
/// Errors: DegenerateParameter, ZeroX when b^2 - 1 - z = 0.
XY derive_xy(const Rational& b);

struct PQRS {
  Integer p, q, r, s;
};

/// (x, b*y, k*x, y) scaled to coprime integers, with k = b(1 + z).
/// Errors: as derive_xy, plus ZeroR when 1 + z = 0.
PQRS derive_pqrs(const Rational& b);

struct DerivationTrace {
  Rational b;
  Rational f;
  Rational g;
  Rational z;
  Rational k;
  Rational x_ratio;  // b^2 - 1 - z, before clearing denominators
  Rational y_ratio;  // b^2 - 1 + fz + gz^2
  Integer x, y;
  Integer p, q, r, s;
  // Signed roots as assembled: A = p+q, B = r-s, C = r+s, D = p-q.
  Integer A, B, C, D;
  Quartet quartet;
};

/// Runs the whole construction. Errors: all of the above, plus
/// TrivialSolution if the result collapses to {|A|,|B|} = {|C|,|D|}.
DerivationTrace derive_quartet(const Rational& b);

}  // namespace quartsum
