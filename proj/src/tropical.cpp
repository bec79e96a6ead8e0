#include "tropseq/tropical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropseq {

HolonomicSystem::HolonomicSystem(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw std::invalid_argument("holonomic system needs order >= 1 (at least two coefficient polynomials)");
  }
}

HolonomicSystem::HolonomicSystem(const Polynomial& a, const Polynomial& b, const Polynomial& c)
    : HolonomicSystem(std::vector<Polynomial>{a, b, c}) {}

std::vector<int> argmin_set(const HolonomicSystem& sys, std::span<const Rational> w, long j) {
  const int n = sys.order();
  if (j < 0 || j + n >= static_cast<long>(w.size())) {
    throw std::out_of_range("argmin_set: window " + std::to_string(j) + " out of range");
  }
  std::vector<Rational> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) terms.push_back(w[static_cast<std::size_t>(j + k)] + sys.coeff(k)(j));
  const Rational& lo = *std::min_element(terms.begin(), terms.end());
  std::vector<int> out;
  for (int k = 0; k <= n; ++k) {
    if (terms[static_cast<std::size_t>(k)] == lo) out.push_back(k);
  }
  return out;
}

CheckResult check_sequence(const HolonomicSystem& sys, std::span<const Rational> w) {
  const long windows = static_cast<long>(w.size()) - sys.order();
  for (long j = 0; j < windows; ++j) {
    if (argmin_set(sys, w, j).size() < 2) return {false, j};
  }
  return {};
}

std::string_view to_string(EntropyCase c) {
  switch (c) {
    case EntropyCase::Case1: return "Case1";
    case EntropyCase::Case2: return "Case2";
    case EntropyCase::Case3: return "Case3";
  }
  return "?";
}

EntropyClass classify(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
  EntropyClass out{EntropyCase::Case3, Rational(0), {}, {}, 0};
  out.d = shift(b, -1) + b - a - shift(c, -1);
  out.e = shift(b, 1) - shift(b, -1) - shift(a, 1) + a - c + shift(c, -1);
  if (out.d.is_zero()) {
    out.case_id = EntropyCase::Case1;
    out.entropy = ratio(1, 3);
    return out;
  }
  const long bound = eventual_sign_index(out.d);
  out.j0 = (bound + 3) / 4;
  if (eventual_sign(out.d) > 0 && out.e.is_zero()) {
    out.case_id = EntropyCase::Case2;
    out.entropy = ratio(1, 4);
  }
  return out;
}

EntropyClass classify(const HolonomicSystem& sys) {
  if (sys.order() != 2) throw std::invalid_argument("classify: only second-order systems are classified");
  return classify(sys.coeff(0), sys.coeff(1), sys.coeff(2));
}

std::size_t case1_slack_count(long n) { return n >= 3 ? static_cast<std::size_t>((n - 3) / 3 + 1) : 0; }

std::size_t case2_slack_count(long n, long j0) {
  const long first = 4 * j0 + 3;
  return n > first ? static_cast<std::size_t>((n - 1 - first) / 4 + 1) : 0;
}

namespace {

void require_nonnegative(std::span<const Rational> slacks) {
  for (const auto& s : slacks) {
    if (sgn(s) < 0) throw std::invalid_argument("slack " + to_string(s) + " is negative");
  }
}

void require_valid_output(const HolonomicSystem& sys, const Sequence& w, const char* who) {
  if (const auto r = check_sequence(sys, w); !r.ok) {
    throw std::logic_error(std::string(who) + ": generated sequence fails window " +
                           std::to_string(*r.failing_window));
  }
}

}  // namespace

Sequence witness_case1(const Polynomial& a, const Polynomial& b, const Polynomial& c, long n,
                       const Rational& u0, std::span<const Rational> slacks) {
  if (classify(a, b, c).case_id != EntropyCase::Case1) {
    throw std::invalid_argument("witness_case1: system is not in Case1");
  }
  if (n < 0) throw std::invalid_argument("witness_case1: negative length");
  if (slacks.size() != case1_slack_count(n)) {
    throw std::invalid_argument("witness_case1: expected " + std::to_string(case1_slack_count(n)) +
                                " slacks, got " + std::to_string(slacks.size()));
  }
  require_nonnegative(slacks);

  Sequence w;
  if (n == 0) return w;
  w.push_back(u0);
  for (long j = 0; static_cast<long>(w.size()) < n; ++j) {
    const long base = 3 * j;
    const Rational u = w.back();
    const Rational u1 = u + b(base - 1) - c(base - 1);
    w.push_back(u1);
    if (static_cast<long>(w.size()) == n) break;
    w.push_back(u + a(base) - c(base) + slacks[static_cast<std::size_t>(j)]);
    if (static_cast<long>(w.size()) == n) break;
    w.push_back(u1 + a(base + 1) - c(base + 1));
  }
  require_valid_output(HolonomicSystem(a, b, c), w, "witness_case1");
  return w;
}

Sequence witness_case2(const Polynomial& a, const Polynomial& b, const Polynomial& c, long n,
                       std::span<const Rational> prefix, std::span<const Rational> slacks) {
  const auto cls = classify(a, b, c);
  if (cls.case_id != EntropyCase::Case2) throw std::invalid_argument("witness_case2: system is not in Case2");
  const HolonomicSystem sys(a, b, c);
  const long j0 = cls.j0;
  if (static_cast<long>(prefix.size()) != 4 * j0 + 1) {
    throw std::invalid_argument("witness_case2: prefix must have length 4*j0+1 = " + std::to_string(4 * j0 + 1));
  }
  if (!check_sequence(sys, prefix).ok) throw std::invalid_argument("witness_case2: prefix fails the relation");
  if (n < 0) throw std::invalid_argument("witness_case2: negative length");
  if (slacks.size() != case2_slack_count(n, j0)) {
    throw std::invalid_argument("witness_case2: expected " + std::to_string(case2_slack_count(n, j0)) +
                                " slacks, got " + std::to_string(slacks.size()));
  }
  require_nonnegative(slacks);

  Sequence v(prefix.begin(), prefix.end());
  const auto full = [&] { return static_cast<long>(v.size()) >= n; };
  for (long j = j0; !full(); ++j) {
    const long base = 4 * j;
    const Rational v0 = v.back();
    const Rational v2 = v0 + a(base) - c(base);
    v.push_back(v0 + b(base - 1) - c(base - 1));
    if (full()) break;
    v.push_back(v2);
    if (full()) break;
    v.push_back(v2 + b(base + 1) - c(base + 1) + slacks[static_cast<std::size_t>(j - j0)]);
    if (full()) break;
    v.push_back(v2 + a(base + 2) - c(base + 2));
  }
  if (static_cast<long>(v.size()) > n) v.resize(static_cast<std::size_t>(n));
  require_valid_output(sys, v, "witness_case2");
  return v;
}

Sequence extend_greedy(const HolonomicSystem& sys, std::span<const Rational> w) {
  const int n = sys.order();
  if (static_cast<long>(w.size()) < n) throw std::invalid_argument("extend_greedy: sequence shorter than the order");
  if (const auto r = check_sequence(sys, w); !r.ok) {
    throw std::invalid_argument("extend_greedy: input fails window " + std::to_string(*r.failing_window));
  }
  const long j = static_cast<long>(w.size()) - n;
  Rational lo = w[static_cast<std::size_t>(j)] + sys.coeff(0)(j);
  for (int k = 1; k < n; ++k) lo = std::min<Rational>(lo, w[static_cast<std::size_t>(j + k)] + sys.coeff(k)(j));
  Sequence out(w.begin(), w.end());
  out.push_back(lo - sys.coeff(n)(j));
  return out;
}

}  // namespace tropseq
