// Text literals for the CLI: quadratic irrationals, continued fractions,
// matrices and generator words.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "serret/cf.hpp"
#include "serret/matrix.hpp"
#include "serret/quadratic.hpp"
#include "serret/unimodular.hpp"

namespace serret {

// Syntax error with the offending input position (0-based).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// "(P+sqrt(D))/Q" with signed P and Q, or the shorthand "sqrt(D)".
QuadraticIrrational parse_qi(std::string_view text);

// "[a0; a1, ..., (p1, p2, ...)]"; the part before the period group is the
// preperiod and may be empty, as in "[; (1)]".
PeriodicCF parse_periodic_cf(std::string_view text);

// "[a0; a1, a2]" or "[a0]": the periodic grammar without the period group.
FiniteCF parse_finite_cf(std::string_view text);

// "[[a,b],[c,d]]".
UniModMatrix parse_matrix(std::string_view text);

// Whitespace-separated tokens "T^k" (signed k), "T" (= T^1), "U", "V".
// The empty string is the empty word.
FreeWord parse_word(std::string_view text);

}  // namespace serret
