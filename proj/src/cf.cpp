#include "serret/cf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace serret {

namespace {

void check_tail_entries(const std::vector<Integer>& terms, const char* what) {
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i] < 1)
      throw std::domain_error(std::string(what) +
                              ": entries past the first must be >= 1");
}

// Moves the first period entry into the preperiod, rotating the period.
void materialize(std::vector<Integer>& pre, std::vector<Integer>& per,
                 std::size_t count) {
  while (pre.size() < count) {
    pre.push_back(per.front());
    std::rotate(per.begin(), per.begin() + 1, per.end());
  }
}

}  // namespace

FiniteCF::FiniteCF(std::vector<Integer> terms) : terms_(std::move(terms)) {
  if (terms_.empty())
    throw std::domain_error("finite continued fraction: needs at least one term");
  check_tail_entries(terms_, "finite continued fraction");
}

PeriodicCF::PeriodicCF(std::vector<Integer> preperiod,
                       std::vector<Integer> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty())
    throw std::domain_error("periodic continued fraction: empty period");
  for (const Integer& t : period_)
    if (t < 1)
      throw std::domain_error(
          "periodic continued fraction: period entries must be >= 1");
  check_tail_entries(preperiod_, "periodic continued fraction");

  // Roll the preperiod/period boundary left while the two last entries
  // agree. Period entries are >= 1, so a rolled entry never violates the
  // period constraint.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.begin(), period_.end() - 1, period_.end());
    preperiod_.pop_back();
  }

  // Shrink the period to its minimal cyclic generator. The last entry is
  // unchanged by tiling, so no new roll becomes possible.
  const std::size_t k = period_.size();
  for (std::size_t d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    bool tiles = true;
    for (std::size_t i = d; i < k && tiles; ++i)
      tiles = period_[i] == period_[i - d];
    if (tiles) {
      period_.resize(d);
      break;
    }
  }
}

const Integer& PeriodicCF::term_at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

ConvergentTable::ConvergentTable(std::span<const Integer> terms) {
  for (const Integer& t : terms) push(t);
}

void ConvergentTable::push(const Integer& term) {
  const std::size_t n = p_.size();
  p_.push_back(term * p_[n - 1] + p_[n - 2]);
  q_.push_back(term * q_[n - 1] + q_[n - 2]);
}

const Integer& ConvergentTable::p(long n) const { return p_.at(n + 2); }

const Integer& ConvergentTable::q(long n) const { return q_.at(n + 2); }

std::pair<Integer, Integer> convergents(std::span<const Integer> terms,
                                        long n) {
  ConvergentTable table;
  for (long i = 0; i <= n; ++i) table.push(terms[static_cast<std::size_t>(i)]);
  return {table.p(n), table.q(n)};
}

PeriodicCF expand(const QuadraticIrrational& x) {
  // Integer-only expansion: with Q | D - P^2 throughout,
  //   a_n = floor((P_n + sqrt(D))/Q_n),
  //   P_{n+1} = a_n Q_n - P_n,  Q_{n+1} = (D - P_{n+1}^2)/Q_n.
  // Complete quotients are in bijection with (P, Q) states, and the
  // cyclic states are exactly the reduced ones (value > 1, conjugate in
  // (-1, 0)), so the period closes when the first reduced state recurs.
  // Lagrange guarantees one appears.
  const Integer& d = x.D();
  const Integer s = isqrt(d);
  Integer p = x.P();
  Integer q = x.Q();

  std::vector<Integer> terms;
  bool anchored = false;
  std::size_t cycle_start = 0;
  Integer anchor_p, anchor_q;
  for (;;) {
    if (anchored && p == anchor_p && q == anchor_q) {
      std::vector<Integer> pre(terms.begin(),
                               terms.begin() + static_cast<long>(cycle_start));
      std::vector<Integer> per(terms.begin() + static_cast<long>(cycle_start),
                               terms.end());
      return {std::move(pre), std::move(per)};
    }
    // Reduced, in integers: 0 < P <= floor(sqrt(D)) gives the negative
    // conjugate, sqrt(D) - P < Q the conjugate above -1, and
    // Q < P + sqrt(D) the value above 1.
    if (!anchored && q > 0 && p > 0 && p <= s && s - p < q && q <= s + p) {
      anchored = true;
      cycle_start = terms.size();
      anchor_p = p;
      anchor_q = q;
    }
    const Integer a =
        q > 0 ? floor_div(p + s, q) : floor_div(-p - s - 1, -q);
    terms.push_back(a);
    p = a * q - p;
    q = exact_div(d - p * p, q);
  }
}

QuadraticIrrational value(const PeriodicCF& cf) {
  // Solve the purely periodic tail y as the fixed point of its convergent
  // matrix: y = (p y + p')/(q y + q') gives q y^2 + (q' - p) y - p' = 0,
  // and a purely periodic value exceeds 1, so y is the larger root.
  const ConvergentTable tail{std::span<const Integer>(cf.period())};
  const long k = tail.count();
  const Integer& p = tail.p(k - 1);
  const Integer& pp = tail.p(k - 2);
  const Integer& q = tail.q(k - 1);
  const Integer& qq = tail.q(k - 2);
  const Integer disc = (qq - p) * (qq - p) + 4 * q * pp;
  const QuadraticIrrational y(p - qq, disc, 2 * q);

  if (cf.preperiod().empty()) return y;
  const ConvergentTable pre{std::span<const Integer>(cf.preperiod())};
  const long m = pre.count();
  const UniModMatrix push_front(pre.p(m - 1), pre.p(m - 2), pre.q(m - 1),
                                pre.q(m - 2));
  return qi_mobius(push_front, y);
}

std::pair<FiniteCF, FiniteCF> rational_expansions(const Integer& a,
                                                  const Integer& c) {
  if (c <= 0) throw std::domain_error("rational_expansions: c must be > 0");

  std::vector<Integer> terms;
  Integer num = a;
  Integer den = c;
  for (;;) {
    const Integer quot = floor_div(num, den);
    terms.push_back(quot);
    Integer rem = num - quot * den;
    if (rem == 0) break;
    num = std::move(den);
    den = std::move(rem);
  }

  // The Euclidean expansion ends with a term >= 2 whenever it has more
  // than one term; the other parity is reached by splitting that last
  // term as (t - 1) + 1/1, or [m] as [m-1; 1].
  std::vector<Integer> variant = terms;
  variant.back() -= 1;
  variant.emplace_back(1);
  return {FiniteCF(std::move(terms)), FiniteCF(std::move(variant))};
}

FiniteCF rational_expansion_with_parity(const Integer& a, const Integer& c,
                                        bool even) {
  auto [euclid, variant] = rational_expansions(a, c);
  if ((euclid.size() % 2 == 0) == even) return euclid;
  return variant;
}

PeriodicCF negate(const PeriodicCF& cf) {
  std::vector<Integer> pre = cf.preperiod();
  std::vector<Integer> per = cf.period();
  materialize(pre, per, 2);

  std::vector<Integer> out;
  out.push_back(-pre[0] - 1);
  if (pre[1] > 1) {
    out.emplace_back(1);
    out.push_back(pre[1] - 1);
    out.insert(out.end(), pre.begin() + 2, pre.end());
  } else {
    materialize(pre, per, 3);
    out.push_back(pre[2] + 1);
    out.insert(out.end(), pre.begin() + 3, pre.end());
  }
  return {std::move(out), std::move(per)};
}

PeriodicCF invert(const PeriodicCF& cf) {
  const Integer& a0 = cf.term_at(0);
  if (a0 < 0) return negate(invert(negate(cf)));
  if (a0 == 0) {
    // a0 = 0 implies a nonempty preperiod (period entries are >= 1).
    std::vector<Integer> pre(cf.preperiod().begin() + 1,
                             cf.preperiod().end());
    return {std::move(pre), cf.period()};
  }
  std::vector<Integer> pre;
  pre.reserve(cf.preperiod().size() + 1);
  pre.emplace_back(0);
  pre.insert(pre.end(), cf.preperiod().begin(), cf.preperiod().end());
  return {std::move(pre), cf.period()};
}

PeriodicCF translate(const PeriodicCF& cf, const Integer& r) {
  if (r == 0) return cf;
  std::vector<Integer> pre = cf.preperiod();
  std::vector<Integer> per = cf.period();
  materialize(pre, per, 1);
  pre[0] += r;
  return {std::move(pre), std::move(per)};
}

PeriodicCF head_peel(const PeriodicCF& cf) {
  if (cf.preperiod().empty()) {
    std::vector<Integer> per = cf.period();
    std::rotate(per.begin(), per.begin() + 1, per.end());
    return {{}, std::move(per)};
  }
  std::vector<Integer> pre(cf.preperiod().begin() + 1, cf.preperiod().end());
  return {std::move(pre), cf.period()};
}

namespace {

// Two sequences that are p-periodic past positions m1 and m2 agree
// everywhere iff they agree on the first max(m1, m2) + p positions.
bool tails_agree(const PeriodicCF& x, std::size_t i, const PeriodicCF& y,
                 std::size_t j, std::size_t period) {
  const std::size_t mx = x.preperiod().size() > i ? x.preperiod().size() - i : 0;
  const std::size_t my = y.preperiod().size() > j ? y.preperiod().size() - j : 0;
  const std::size_t horizon = std::max(mx, my) + period;
  for (std::size_t k = 0; k < horizon; ++k)
    if (x.term_at(i + k) != y.term_at(j + k)) return false;
  return true;
}

// The offset d with rotate_left(from, d) == to, if any: the first
// occurrence of `to` in the doubled `from`, found with the classic
// prefix-function matcher so long periods stay linear.
std::optional<std::size_t> rotation_offset(const std::vector<Integer>& from,
                                           const std::vector<Integer>& to) {
  const std::size_t p = from.size();
  std::vector<std::size_t> prefix(p, 0);
  for (std::size_t i = 1; i < p; ++i) {
    std::size_t k = prefix[i - 1];
    while (k > 0 && to[i] != to[k]) k = prefix[k - 1];
    if (to[i] == to[k]) ++k;
    prefix[i] = k;
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < 2 * p; ++i) {
    const Integer& c = from[i % p];
    while (k > 0 && c != to[k]) k = prefix[k - 1];
    if (c == to[k]) ++k;
    if (k == p) return i + 1 - p;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> tail_match(
    const PeriodicCF& x, const PeriodicCF& y) {
  // Canonical periods are minimal, so matching tails force equal period
  // length and cyclically equivalent periods. Minimality also means there
  // is at most one offset with rotate_left(per_x, delta) == per_y.
  const std::size_t p = x.period().size();
  if (p != y.period().size()) return std::nullopt;
  const std::optional<std::size_t> delta =
      rotation_offset(x.period(), y.period());
  if (!delta) return std::nullopt;

  // Deep in the periodic zone both tails are rotations of the same word,
  // which pins every match to diagonals i - j == mx + delta - my (mod p).
  // Any match reduces, by stepping back whole periods, to one with
  // i < mx + p and j < my + p, so scanning those diagonals in order
  // yields the lexicographic minimum.
  const std::size_t mx = x.preperiod().size();
  const std::size_t my = y.preperiod().size();
  const std::size_t residue = ((mx + *delta) % p + p - my % p) % p;
  for (std::size_t i = 0; i < mx + p; ++i)
    for (std::size_t j = (i % p + p - residue) % p; j < my + p; j += p)
      if (tails_agree(x, i, y, j, p)) return {{i, j}};
  return std::nullopt;
}

}  // namespace serret
