// Continued-fraction engine: finite and eventually periodic expansions,
// convergents, and the sequence-level rewrite rules (negation, inversion,
// translation, head peeling, tail matching).
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "serret/integer.hpp"
#include "serret/quadratic.hpp"

namespace serret {

// A finite expansion [a0, ..., ak] of a rational. Entries at index >= 1
// must be >= 1; the first entry is unrestricted. Both the canonical form
// (last term >= 2 when length >= 2) and the length+-1 variant are legal.
class FiniteCF {
 public:
  explicit FiniteCF(std::vector<Integer> terms);

  const std::vector<Integer>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const FiniteCF& o) const = default;

 private:
  std::vector<Integer> terms_;
};

// An eventually periodic expansion: preperiod followed by a repeating
// period. Always stored canonically: the period has minimal length and the
// preperiod is minimal (its last entry differs from the period's last
// entry). Period entries are >= 1; preperiod entries past the first too.
class PeriodicCF {
 public:
  // Validates entries and canonicalizes. Throws std::domain_error on
  // invalid entries or an empty period.
  PeriodicCF(std::vector<Integer> preperiod, std::vector<Integer> period);

  const std::vector<Integer>& preperiod() const { return preperiod_; }
  const std::vector<Integer>& period() const { return period_; }

  // Partial quotient at position i of the unrolled sequence.
  const Integer& term_at(std::size_t i) const;

  bool operator==(const PeriodicCF& o) const = default;

 private:
  std::vector<Integer> preperiod_;
  std::vector<Integer> period_;
};

// Convergent numerators p_n and denominators q_n, indexed from -2 with
// seeds p_-2 = 0, p_-1 = 1, q_-2 = 1, q_-1 = 0 and the recurrence
// p_n = a_n p_{n-1} + p_{n-2} (likewise q).
class ConvergentTable {
 public:
  ConvergentTable() = default;
  explicit ConvergentTable(std::span<const Integer> terms);

  void push(const Integer& term);

  // Number of terms pushed so far.
  long count() const { return static_cast<long>(p_.size()) - 2; }

  // Valid for -2 <= n < count().
  const Integer& p(long n) const;
  const Integer& q(long n) const;

 private:
  std::vector<Integer> p_{0, 1};
  std::vector<Integer> q_{1, 0};
};

// (p_n, q_n) for the given term sequence; n >= -2.
std::pair<Integer, Integer> convergents(std::span<const Integer> terms,
                                        long n);

// Eventually periodic expansion of x; terminates by Lagrange's theorem.
PeriodicCF expand(const QuadraticIrrational& x);

// Exact value of an eventually periodic expansion.
QuadraticIrrational value(const PeriodicCF& cf);

// The two finite expansions of a/c (c > 0), one of even and one of odd
// length: the Euclidean expansion and its length+-1 variant.
// Throws std::domain_error if c <= 0.
std::pair<FiniteCF, FiniteCF> rational_expansions(const Integer& a,
                                                  const Integer& c);

// Picks whichever of the two expansions of a/c has length of the given
// parity (even = true picks even length).
FiniteCF rational_expansion_with_parity(const Integer& a, const Integer& c,
                                        bool even);

// Canonical expansion of -value(cf), via the sequence-level case split
//   -[a0, a1, x2] = [-a0-1, 1, a1-1, x2]   (a1 > 1)
//   -[a0, 1,  x2] = [-a0-1, x2+1]          (a1 = 1).
PeriodicCF negate(const PeriodicCF& cf);

// Canonical expansion of 1/value(cf): prepend 0 when a0 >= 1, drop the
// leading 0 when a0 = 0, and reduce to the positive case via negate()
// when a0 < 0.
PeriodicCF invert(const PeriodicCF& cf);

// Canonical expansion of value(cf) + r.
PeriodicCF translate(const PeriodicCF& cf, const Integer& r);

// Expansion of the first complete quotient x1, i.e. the sequence with a0
// dropped; equals invert(translate(cf, -a0)).
PeriodicCF head_peel(const PeriodicCF& cf);

// The lexicographically minimal (i, j) such that the partial-quotient
// sequences agree from positions i and j on, or nullopt when the
// expansions share no tail.
std::optional<std::pair<std::size_t, std::size_t>> tail_match(
    const PeriodicCF& x, const PeriodicCF& y);

}  // namespace serret
