// Printing, inverse to the parse grammar.
#pragma once

#include <string>

#include "serret/cf.hpp"
#include "serret/matrix.hpp"
#include "serret/quadratic.hpp"
#include "serret/unimodular.hpp"

namespace serret {

std::string to_string(const QuadraticIrrational& x);  // (P+sqrt(D))/Q
std::string to_string(const PeriodicCF& cf);          // [a0; a1, (p1, p2)]
std::string to_string(const FiniteCF& cf);            // [a0; a1, a2]
std::string to_string(const UniModMatrix& m);         // [[a,b],[c,d]]
std::string to_string(const GeneratorWord& w);        // V T^1 U T^0
std::string to_string(const FreeWord& w);

}  // namespace serret
