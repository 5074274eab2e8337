#pragma once

// Exact characteristic polynomials and real-root comparison over Q.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "splitex/graph.hpp"

namespace splitex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer polynomial, coefficients from the constant term upward. The zero
/// polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }

  /// Sign of p(x).
  int sign_at(const Rational& x) const;
  int sign_at_positive_infinity() const;
  int sign_at_negative_infinity() const;
  Rational evaluate(const Rational& x) const;

  Polynomial derivative() const;
  std::string to_string() const;

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// det(tI - A(G)) by the Faddeev–LeVerrier recurrence in exact integers.
Polynomial characteristic_polynomial(const Graph& g);

/// Largest order accepted by the exact comparison paths.
inline constexpr int kExactOrderLimit = 16;

/// gcd over Q, scaled to a primitive integer polynomial with positive leading
/// coefficient. gcd(0, 0) is zero.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p').
Polynomial squarefree_part(const Polynomial& p);

/// Half-open interval (lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// Sturm sequence of the squarefree part of a nonzero polynomial.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);

  /// Distinct real roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  int count_roots(const RationalInterval& iv) const { return count_roots(iv.lo, iv.hi); }
  /// Distinct real roots in (a, +inf).
  int count_roots_above(const Rational& a) const;
  const Polynomial& squarefree() const { return chain_.front(); }

 private:
  int variations(const Rational& x) const;
  int variations_at_positive_infinity() const;
  std::vector<Polynomial> chain_;
};

/// Isolating interval of the largest real root. `hint` is tried first and
/// discarded when it does not isolate that root.
RationalInterval isolate_largest_root(const SturmChain& chain, std::optional<RationalInterval> hint = {});

/// Halves an isolating interval of the largest root.
void refine_largest_root(const SturmChain& chain, RationalInterval& iv);

/// Compares the largest real roots of two polynomials exactly. Equality is
/// declared only when a common root lies in both isolating intervals.
std::strong_ordering compare_largest_roots(const Polynomial& a, const Polynomial& b,
                                           std::optional<RationalInterval> hint_a = {},
                                           std::optional<RationalInterval> hint_b = {});

/// Sign of d at the largest real root of p.
int sign_at_largest_root(const Polynomial& p, const Polynomial& d,
                         std::optional<RationalInterval> hint = {});

/// A rational c with exactly one distinct root of p above it: every other
/// root of p is <= c. Requires at least two distinct real roots.
Rational separate_largest_root(const Polynomial& p);

/// Exact conversion of a finite double.
Rational to_rational(double x);

}  // namespace splitex
