#include "quartsum/parametrization.hpp"

#include <utility>

#include "quartsum/error.hpp"

namespace quartsum {

namespace {

void require_nondegenerate(const Rational& b) {
  if (b.is_zero()) {
    throw Error(ErrorKind::DegenerateParameter, "b = 0 is degenerate: it makes q = 0");
  }
  if (b * b == Rational(1)) {
    throw Error(ErrorKind::DegenerateParameter,
                "b = " + to_string(b) + " is degenerate: g has a zero denominator (g = infinity)");
  }
}

// Clears denominators of rational values and divides out the common gcd.
template <std::size_t N>
std::array<Integer, N> to_coprime_integers(const std::array<Rational, N>& values) {
  Integer scale = 1;
  for (const Rational& v : values) scale = lcm(scale, v.den());
  std::array<Integer, N> out;
  Integer g = 0;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = values[i].num() * (scale / values[i].den());
    g = gcd(g, out[i]);
  }
  if (g > 1) {
    for (Integer& v : out) v /= g;
  }
  return out;
}

}  // namespace

Rational compute_f(const Rational& b) { return (Rational(3) * b * b - 1) / 2; }

Rational compute_g(const Rational& b) {
  const Rational bb = b * b;
  if (bb == Rational(1)) {
    throw Error(ErrorKind::DegenerateParameter,
                "b = " + to_string(b) + " is degenerate: g has a zero denominator (g = infinity)");
  }
  return (Rational(3) * bb * bb - Rational(18) * bb - 1) / (Rational(8) * (bb - 1));
}

Rational compute_z(const Rational& b) {
  require_nondegenerate(b);
  const Rational bb = b * b;
  const Rational f = compute_f(b);
  const Rational g = compute_g(b);
  return (bb * (bb - 4) - Rational(2) * f * g) / (bb + g * g);
}

std::array<Rational, 5> radicand_coeffs(const Rational& b) {
  const Rational bb = b * b;
  return {
      (bb - 1) * (bb - 1),
      (bb - 1) * (Rational(3) * bb - 1),
      Rational(3) * bb * (bb - 2),
      bb * (bb - 4),
      -bb,
  };
}

Rational radicand_root(const Rational& b, const Rational& z) {
  return b * b - 1 + compute_f(b) * z + compute_g(b) * z * z;
}

namespace {

struct Ratios {
  Rational z;
  Rational x_ratio;
  Rational y_ratio;
};

Ratios compute_ratios(const Rational& b) {
  Rational z = compute_z(b);
  Rational x_ratio = b * b - 1 - z;
  if (x_ratio.is_zero()) {
    throw Error(ErrorKind::ZeroX, "b = " + to_string(b) + " gives b^2 - 1 - z = 0, so p = 0");
  }
  Rational y_ratio = radicand_root(b, z);
  return {std::move(z), std::move(x_ratio), std::move(y_ratio)};
}

XY xy_from_ratios(const Ratios& ratios) {
  // Lowest terms of y/x give the coprime pair with a positive denominator.
  const Rational slope = ratios.y_ratio / ratios.x_ratio;
  return {slope.den(), slope.num()};
}

PQRS pqrs_from(const Rational& b, const Rational& k, const XY& xy) {
  const auto v = to_coprime_integers<4>({Rational(xy.x), b * xy.y, k * xy.x, Rational(xy.y)});
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

XY derive_xy(const Rational& b) { return xy_from_ratios(compute_ratios(b)); }

PQRS derive_pqrs(const Rational& b) {
  const Ratios ratios = compute_ratios(b);
  const Rational k = b * (1 + ratios.z);
  if (k.is_zero()) {
    throw Error(ErrorKind::ZeroR, "b = " + to_string(b) + " gives 1 + z = 0, so r = 0");
  }
  return pqrs_from(b, k, xy_from_ratios(ratios));
}

DerivationTrace derive_quartet(const Rational& b) {
  Ratios ratios = compute_ratios(b);
  Rational k = b * (1 + ratios.z);
  if (k.is_zero()) {
    throw Error(ErrorKind::ZeroR, "b = " + to_string(b) + " gives 1 + z = 0, so r = 0");
  }
  XY xy = xy_from_ratios(ratios);
  PQRS v = pqrs_from(b, k, xy);

  Integer A = v.p + v.q;
  Integer B = v.r - v.s;
  Integer C = v.r + v.s;
  Integer D = v.p - v.q;
  Quartet quartet = canonicalize(A, B, C, D);

  return DerivationTrace{
      b,
      compute_f(b),
      compute_g(b),
      std::move(ratios.z),
      std::move(k),
      std::move(ratios.x_ratio),
      std::move(ratios.y_ratio),
      std::move(xy.x),
      std::move(xy.y),
      std::move(v.p),
      std::move(v.q),
      std::move(v.r),
      std::move(v.s),
      std::move(A),
      std::move(B),
      std::move(C),
      std::move(D),
      std::move(quartet),
  };
}

}  // namespace quartsum
