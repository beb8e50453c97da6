// PGL2(Z) as a group of words: generator words, the continued-fraction
// decomposition of a unimodular matrix, the unique normal form, relator
// self-checks, and the constructive equivalence decider for quadratic
// irrationals.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "serret/cf.hpp"
#include "serret/matrix.hpp"
#include "serret/quadratic.hpp"

namespace serret {

// One letter of an unreduced word over the generators: T^k, U, or V.
struct FreeLetter {
  enum class Kind { T, U, V };

  Kind kind;
  Integer exponent;  // meaningful for T only

  static FreeLetter t(Integer k) { return {Kind::T, std::move(k)}; }
  static FreeLetter u() { return {Kind::U, 0}; }
  static FreeLetter v() { return {Kind::V, 0}; }

  bool operator==(const FreeLetter& o) const = default;
};

// A word in the input alphabet; leftmost letter is applied last, so the
// word g1 g2 ... gk acts as the map g1 o g2 o ... o gk.
struct FreeWord {
  std::vector<FreeLetter> letters;

  bool operator==(const FreeWord& o) const = default;
};

// The normal form V^e T^{a0} U T^{a1} U ... U T^{an}: interior exponents
// are strictly positive, the first and last are unrestricted, and e may
// be 1 only when there is a single exponent block.
class GeneratorWord {
 public:
  // Throws std::domain_error if the invariants are violated.
  GeneratorWord(int e, std::vector<Integer> exponents);

  int e() const { return e_; }
  const std::vector<Integer>& exponents() const { return exponents_; }

  bool operator==(const GeneratorWord& o) const = default;

 private:
  int e_;
  std::vector<Integer> exponents_;
};

// Result of decompose() for c > 0: the expansion a/c = [terms...] whose
// length n has (-1)^n = det, and the unique r with b = r p_{n-1} + p_{n-2}
// and d = r q_{n-1} + q_{n-2}.
struct CFDecomposition {
  std::vector<Integer> terms;
  Integer r;

  bool operator==(const CFDecomposition& o) const = default;
};

// Result of decompose() for c = 0 (so d = 1 after sign normalization):
// the map y = sign * x + shift.
struct AffineDecomposition {
  int sign;  // +1 or -1
  Integer shift;

  bool operator==(const AffineDecomposition& o) const = default;
};

using Decomposition = std::variant<CFDecomposition, AffineDecomposition>;

UniModMatrix word_to_matrix(const FreeWord& w);
UniModMatrix word_to_matrix(const GeneratorWord& w);

// Continued-fraction decomposition of a canonical matrix.
// Throws std::domain_error if m is not in canonical sign form.
Decomposition decompose(const UniModMatrix& m);

// The unique generator word representing m projectively.
GeneratorWord normal_form(const UniModMatrix& m);

// normal_form(word_to_matrix(w)); words differing by relator insertions
// reduce identically.
GeneratorWord reduce_word(const FreeWord& w);

struct RelatorCheck {
  std::string name;
  bool ok;
};

// Evaluates the presentation relators (and the V-elimination identity
// UV = T^-1 U T U T^-1) and reports whether each is the projective
// identity.
std::vector<RelatorCheck> relator_selftest();

// Constructive Serret equivalence: a matrix M with M(x) = y when the
// expansions of x and y share a tail, nullopt otherwise.
std::optional<UniModMatrix> serret_equivalent(const QuadraticIrrational& x,
                                              const QuadraticIrrational& y);

// The explicit chain of expansions from y = m(x) down to x: one entry per
// peeled decomposition term, plus a final translation by -r when r != 0.
// Consecutive entries share a complete quotient; the last entry equals
// expand(x). Throws std::domain_error unless m is canonical with c > 0.
std::vector<PeriodicCF> equivalence_chain(const UniModMatrix& m,
                                          const QuadraticIrrational& x);

}  // namespace serret
