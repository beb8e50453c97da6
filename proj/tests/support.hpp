// Shared test helpers: independent oracles and random value generators.
// Everything here is deliberately written against the public contracts
// only, so the oracles stay independent of the library internals.
#pragma once

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "serret/cf.hpp"
#include "serret/integer.hpp"
#include "serret/matrix.hpp"
#include "serret/quadratic.hpp"
#include "serret/unimodular.hpp"

namespace serret::testing {

using Rng = std::mt19937_64;

inline long rand_long(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// ---------------------------------------------------------------------
// Oracles

// Textbook PQa expansion loop, kept free of the library's canonical-form
// machinery: raw preperiod/period vectors from the first repeated state.
struct PqaResult {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
};

inline PqaResult pqa_expand_oracle(Integer p, const Integer& d, Integer q) {
  const Integer s = isqrt(d);
  std::vector<Integer> terms;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  for (;;) {
    auto key = std::make_pair(p, q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      PqaResult out;
      out.preperiod.assign(terms.begin(),
                           terms.begin() + static_cast<long>(it->second));
      out.period.assign(terms.begin() + static_cast<long>(it->second),
                        terms.end());
      return out;
    }
    seen.emplace(std::move(key), terms.size());
    Integer a;
    if (q > 0)
      mpz_fdiv_q(a.get_mpz_t(), Integer(p + s).get_mpz_t(), q.get_mpz_t());
    else
      mpz_fdiv_q(a.get_mpz_t(), Integer(-p - s - 1).get_mpz_t(),
                 Integer(-q).get_mpz_t());
    terms.push_back(a);
    p = a * q - p;
    q = (d - p * p) / q;
  }
}

// Exact comparison of (P + sqrt(D))/Q against an integer bound, via sign
// analysis and squaring; used to verify qi_floor without floor division.
// Returns true iff x < m.
inline bool qi_less_than_int(const QuadraticIrrational& x, const Integer& m) {
  // x < m  <=>  P + sqrt(D) < m Q   (Q > 0)
  //        <=>  P + sqrt(D) > m Q   (Q < 0)
  const Integer t = m * x.Q() - x.P();
  const bool want_sqrt_less = x.Q() > 0;  // sqrt(D) ? t
  if (want_sqrt_less) return t > 0 && x.D() < t * t;
  return t < 0 || x.D() > t * t;
}

// Brute-force tail matcher: unroll both sequences far enough that the
// periodic parts overlap, then scan all (i, j) in lexicographic order.
// Agreement over max(remaining preperiods) + lcm(periods) positions is
// conclusive for eventually periodic sequences.
inline std::optional<std::pair<std::size_t, std::size_t>> tail_match_oracle(
    const PeriodicCF& x, const PeriodicCF& y) {
  const std::size_t px = x.period().size();
  const std::size_t py = y.period().size();
  std::size_t l = px;
  while (l % py != 0) l += px;  // lcm
  const std::size_t bound_x = x.preperiod().size() + 2 * l + 4;
  const std::size_t bound_y = y.preperiod().size() + 2 * l + 4;
  for (std::size_t i = 0; i < bound_x; ++i) {
    for (std::size_t j = 0; j < bound_y; ++j) {
      const std::size_t mx =
          x.preperiod().size() > i ? x.preperiod().size() - i : 0;
      const std::size_t my =
          y.preperiod().size() > j ? y.preperiod().size() - j : 0;
      const std::size_t horizon = std::max(mx, my) + l;
      bool ok = true;
      for (std::size_t k = 0; k < horizon && ok; ++k)
        ok = x.term_at(i + k) == y.term_at(j + k);
      if (ok) return {{i, j}};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------
// Random values

inline QuadraticIrrational rand_qi(Rng& rng, long bound = 1000) {
  const Integer p = rand_long(rng, -bound, bound);
  Integer d;
  do {
    d = rand_long(rng, 2, bound);
  } while (is_perfect_square(d));
  Integer q;
  do {
    q = rand_long(rng, -bound, bound);
  } while (q == 0);
  return {p, d, q};
}

inline PeriodicCF rand_periodic_cf(Rng& rng, long entry_bound = 9,
                                   long max_pre = 4, long max_per = 4) {
  const long pre_len = rand_long(rng, 0, max_pre);
  std::vector<Integer> pre;
  for (long i = 0; i < pre_len; ++i)
    pre.emplace_back(i == 0 ? rand_long(rng, -entry_bound, entry_bound)
                            : rand_long(rng, 1, entry_bound));
  const long per_len = rand_long(rng, 1, max_per);
  std::vector<Integer> per;
  for (long i = 0; i < per_len; ++i)
    per.emplace_back(rand_long(rng, 1, entry_bound));
  return {std::move(pre), std::move(per)};
}

// Uniform-ish generator word within the stated shape bounds. blocks is
// the number of exponents (n + 1 in V^e T^a0 U ... U T^an).
inline GeneratorWord rand_generator_word(Rng& rng, long max_blocks = 8,
                                         long exp_bound = 10) {
  const long blocks = rand_long(rng, 1, max_blocks);
  std::vector<Integer> exps;
  for (long i = 0; i < blocks; ++i) {
    const bool edge = i == 0 || i == blocks - 1;
    exps.emplace_back(edge ? rand_long(rng, -exp_bound, exp_bound)
                           : rand_long(rng, 1, exp_bound));
  }
  const int e = blocks == 1 ? static_cast<int>(rand_long(rng, 0, 1)) : 0;
  return {e, std::move(exps)};
}

// Random product of T-powers and U with at least one U, so c > 0.
inline UniModMatrix rand_matrix_c_positive(Rng& rng, long max_blocks = 8,
                                           long exp_bound = 10) {
  GeneratorWord w = rand_generator_word(rng, max_blocks, exp_bound);
  while (w.exponents().size() < 2)
    w = rand_generator_word(rng, max_blocks, exp_bound);
  return word_to_matrix(w);
}

inline UniModMatrix rand_matrix(Rng& rng, long max_blocks = 6,
                                long exp_bound = 8) {
  return word_to_matrix(rand_generator_word(rng, max_blocks, exp_bound));
}

inline FreeWord rand_free_word(Rng& rng, long max_len = 10,
                               long exp_bound = 6) {
  FreeWord w;
  const long len = rand_long(rng, 0, max_len);
  for (long i = 0; i < len; ++i) {
    switch (rand_long(rng, 0, 2)) {
      case 0:
        w.letters.push_back(FreeLetter::t(rand_long(rng, -exp_bound, exp_bound)));
        break;
      case 1:
        w.letters.push_back(FreeLetter::u());
        break;
      default:
        w.letters.push_back(FreeLetter::v());
        break;
    }
  }
  return w;
}

}  // namespace serret::testing
