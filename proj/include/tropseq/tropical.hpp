#pragma once

#include "tropseq/poly.hpp"
#include "tropseq/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tropseq {

using Sequence = std::vector<Rational>;

/// The coefficient vector (A_0, ..., A_n) of a tropical holonomic relation of order n.
/// For order 2 the three positions hold A, B and C.
class HolonomicSystem {
 public:
  explicit HolonomicSystem(std::vector<Polynomial> coeffs);
  HolonomicSystem(const Polynomial& a, const Polynomial& b, const Polynomial& c);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const Polynomial& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  friend bool operator==(const HolonomicSystem&, const HolonomicSystem&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// Positions k in {0..n} where w[j+k] + A_k(j) attains the window minimum.
/// Throws std::out_of_range unless 0 <= j <= len(w) - n - 1.
std::vector<int> argmin_set(const HolonomicSystem& sys, std::span<const Rational> w, long j);

struct CheckResult {
  bool ok = true;
  std::optional<long> failing_window;
};

/// True iff every window of w attains its minimum at least twice.
CheckResult check_sequence(const HolonomicSystem& sys, std::span<const Rational> w);

enum class EntropyCase { Case1, Case2, Case3 };

std::string_view to_string(EntropyCase c);

struct EntropyClass {
  EntropyCase case_id;
  Rational entropy;
  /// D(x) = B(x-1) + B(x) - A(x) - C(x-1)
  Polynomial d;
  /// E(x) = B(x+1) - B(x-1) - A(x+1) + A(x) - C(x) + C(x-1), which equals D(x+1) - D(x)
  Polynomial e;
  /// Block threshold: 4*j0 >= eventual_sign_index(D); 0 when D is zero.
  long j0 = 0;
};

/// Entropy trichotomy for the second-order relation min{w_j + A(j), w_{j+1} + B(j), w_{j+2} + C(j)}.
EntropyClass classify(const Polynomial& a, const Polynomial& b, const Polynomial& c);
EntropyClass classify(const HolonomicSystem& sys);

/// Number of free coordinates (indices 3j+2 below n) of the Case1 family of length n.
std::size_t case1_slack_count(long n);

/// Number of free coordinates (indices 4j+3 below n with j >= j0) of the Case2 family.
std::size_t case2_slack_count(long n, long j0);

/**
 * Member of the Case1 family of length n starting at u0. Coordinates 3j+2
 * are free above their lower bound w_{3j} + A(3j) - C(3j); slacks[j] is the
 * excess over that bound. Throws std::invalid_argument for non-Case1
 * systems, negative slacks or a slack count other than case1_slack_count(n).
 */
Sequence witness_case1(const Polynomial& a, const Polynomial& b, const Polynomial& c, long n,
                       const Rational& u0, std::span<const Rational> slacks);

/**
 * Extends a valid prefix of length 4*j0 + 1 to length n by blocks of four
 * starting at 4j for j >= j0. Coordinate 4j+3 is free above
 * v_{4j+2} + B(4j+1) - C(4j+1); slacks[j - j0] is the excess.
 */
Sequence witness_case2(const Polynomial& a, const Polynomial& b, const Polynomial& c, long n,
                       std::span<const Rational> prefix, std::span<const Rational> slacks);

/// Appends the value that ties the last window at its minimum over the first n terms.
Sequence extend_greedy(const HolonomicSystem& sys, std::span<const Rational> w);

}  // namespace tropseq
