#include "tropseq/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tropseq {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::eval(long i) const { return eval(Rational(i)); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) out[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) out[k] += q.coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& a : out) a *= c;
  return Polynomial(std::move(out));
}

Polynomial combine(const Polynomial& p, const Polynomial& q, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("combine: sign must be +1 or -1");
  return sign == 1 ? p + q : p - q;
}

Polynomial shift(const Polynomial& p, long c) {
  // Horner in the shifted variable: P(x + c) = (...(a_d (x+c) + a_{d-1})(x+c) + ...).
  const Polynomial step({Rational(c), Rational(1)});
  std::vector<Rational> acc;
  const auto& a = p.coeffs();
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] += acc[k] * step.coeffs()[0];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return Polynomial(std::move(acc));
}

int eventual_sign(const Polynomial& p) { return p.is_zero() ? 0 : sgn(p.leading()); }

long eventual_sign_index(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("eventual_sign_index: zero polynomial has no eventual sign");
  if (p.degree() == 0) return 0;
  const Rational lead = abs(p.leading());
  Rational worst = 0;
  for (int k = 0; k < p.degree(); ++k) worst = std::max<Rational>(worst, abs(p.coeffs()[k]) / lead);
  return ceil_to_long(1 + worst);
}

}  // namespace tropseq
