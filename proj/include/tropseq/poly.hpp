#pragma once

#include "tropseq/rational.hpp"

#include <initializer_list>
#include <vector>

namespace tropseq {

/**
 * Univariate polynomial with exact rational coefficients.
 *
 * coeffs()[k] is the coefficient of x^k. The representation is canonical:
 * no trailing zero coefficient, and the zero polynomial has no coefficients
 * at all (its degree is reported as -1).
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// The monomial x.
  static Polynomial x();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;

  Rational operator()(long i) const { return eval(i); }
  Rational eval(long i) const;
  Rational eval(const Rational& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial operator-() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// P + sign * Q for sign in {+1, -1}.
Polynomial combine(const Polynomial& p, const Polynomial& q, int sign);

/// The polynomial x -> P(x + c).
Polynomial shift(const Polynomial& p, long c);

/// Sign of P(j) for all sufficiently large j: the sign of the leading coefficient, 0 for P = 0.
int eventual_sign(const Polynomial& p);

/// Smallest M >= 0 given by the Cauchy bound ceil(1 + max|a_k| / |a_d|) such that
/// sign(P(i)) == eventual_sign(P) for every integer i >= M. Constants give 0.
/// Throws std::invalid_argument for the zero polynomial.
long eventual_sign_index(const Polynomial& p);

}  // namespace tropseq
