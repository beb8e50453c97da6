#include "serret/format.hpp"

namespace serret {

namespace {

void join(std::string& out, const std::vector<Integer>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].get_str();
  }
}

}  // namespace

std::string to_string(const QuadraticIrrational& x) {
  return "(" + x.P().get_str() + "+sqrt(" + x.D().get_str() + "))/" +
         x.Q().get_str();
}

std::string to_string(const PeriodicCF& cf) {
  std::string out = "[";
  if (cf.preperiod().empty()) {
    out += ";(";
  } else {
    out += cf.preperiod().front().get_str() + "; ";
    for (std::size_t i = 1; i < cf.preperiod().size(); ++i)
      out += cf.preperiod()[i].get_str() + ", ";
    out += "(";
  }
  join(out, cf.period());
  out += ")]";
  return out;
}

std::string to_string(const FiniteCF& cf) {
  std::string out = "[" + cf.terms().front().get_str();
  if (cf.terms().size() > 1) {
    out += "; ";
    for (std::size_t i = 1; i < cf.terms().size(); ++i) {
      if (i > 1) out += ", ";
      out += cf.terms()[i].get_str();
    }
  }
  out += "]";
  return out;
}

std::string to_string(const UniModMatrix& m) {
  return "[[" + m.a().get_str() + "," + m.b().get_str() + "],[" +
         m.c().get_str() + "," + m.d().get_str() + "]]";
}

std::string to_string(const GeneratorWord& w) {
  std::string out = w.e() == 1 ? "V " : "";
  for (std::size_t i = 0; i < w.exponents().size(); ++i) {
    if (i > 0) out += " U ";
    out += "T^" + w.exponents()[i].get_str();
  }
  return out;
}

std::string to_string(const FreeWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out += " ";
    switch (w.letters[i].kind) {
      case FreeLetter::Kind::T:
        out += "T^" + w.letters[i].exponent.get_str();
        break;
      case FreeLetter::Kind::U:
        out += "U";
        break;
      case FreeLetter::Kind::V:
        out += "V";
        break;
    }
  }
  return out;
}

}  // namespace serret
