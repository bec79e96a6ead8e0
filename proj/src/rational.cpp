#include "tropseq/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tropseq {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_natural_literal(std::string_view s) {
  return !s.empty() && s.front() != '-' && is_integer_literal(s);
}

}  // namespace

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  }
  Rational r;
  r.get_num() = mpz_class(std::string(num), 10);
  if (slash == std::string_view::npos) {
    r.get_den() = 1;
    return r;
  }
  const auto den = text.substr(slash + 1);
  if (!is_natural_literal(den)) {
    throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  }
  r.get_den() = mpz_class(std::string(den), 10);
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

long ceil_to_long(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("ceil_to_long: value out of range");
  return q.get_si();
}

}  // namespace tropseq
