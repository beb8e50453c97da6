#include "serret/cli.hpp"

#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <variant>

#include "serret/cf.hpp"
#include "serret/format.hpp"
#include "serret/parse.hpp"
#include "serret/quadratic.hpp"
#include "serret/unimodular.hpp"

namespace serret {

namespace {

constexpr const char* kUsage = R"(usage: serret [--json] <verb> <args>

verbs:
  expand <qi>            continued fraction of a quadratic irrational
  value <cf>             exact value of a periodic continued fraction
  eq <qi> <qi>           equivalence witness matrix, or "not equivalent"
  apply <matrix> <qi>    image under an integer Mobius map
  decompose <matrix>     continued-fraction decomposition (terms and r)
  normal-form <matrix>   unique word V^e T^a0 U T^a1 ... U T^an
  reduce <word>          normal form of an arbitrary T/U/V word
  chain <matrix> <qi>    step-by-step equivalence chain, one CF per line
  selftest               verify the group relators

literals:
  qi      (1+sqrt(5))/2   sqrt(2)
  cf      [1; (2)]        [; (1)]
  matrix  [[2,1],[1,1]]
  word    T^2 U T^-1 V

flags:
  --json   print a single {"verb", "result", "witness"?} object
)";

using nlohmann::json;

// Single-result verbs print one line; chain and selftest print one line
// per entry. JSON mode wraps the same strings into one object.
void emit(std::ostream& out, bool json_mode, const std::string& verb,
          const json& result, const json* witness = nullptr) {
  if (json_mode) {
    json obj{{"verb", verb}, {"result", result}};
    if (witness != nullptr) obj["witness"] = *witness;
    out << obj.dump() << "\n";
    return;
  }
  if (result.is_array()) {
    for (const auto& line : result) out << line.get<std::string>() << "\n";
  } else {
    out << result.get<std::string>() << "\n";
  }
  if (witness != nullptr) out << witness->get<std::string>() << "\n";
}

std::string decomposition_line(const Decomposition& dec) {
  if (const auto* affine = std::get_if<AffineDecomposition>(&dec)) {
    return std::string("sign = ") + (affine->sign >= 0 ? "+1" : "-1") +
           "; shift = " + affine->shift.get_str();
  }
  const auto& cf = std::get<CFDecomposition>(dec);
  std::string out = "terms = [";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += cf.terms[i].get_str();
  }
  out += "]; r = " + cf.r.get_str();
  return out;
}

void require_arity(const std::vector<std::string>& rest, std::size_t n) {
  if (rest.size() != n + 1)
    throw std::domain_error("wrong number of arguments for '" + rest[0] +
                            "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  bool json_mode = false;
  std::vector<std::string> rest;
  for (const std::string& a : args) {
    if (a == "--json")
      json_mode = true;
    else if (a == "--help" || a == "-h") {
      out << kUsage;
      return 0;
    } else
      rest.push_back(a);
  }
  if (rest.empty()) {
    err << kUsage;
    return 2;
  }

  const std::string& verb = rest[0];
  try {
    if (verb == "expand") {
      require_arity(rest, 1);
      emit(out, json_mode, verb, to_string(expand(parse_qi(rest[1]))));
    } else if (verb == "value") {
      require_arity(rest, 1);
      emit(out, json_mode, verb, to_string(value(parse_periodic_cf(rest[1]))));
    } else if (verb == "eq") {
      require_arity(rest, 2);
      const auto witness =
          serret_equivalent(parse_qi(rest[1]), parse_qi(rest[2]));
      if (!witness) {
        emit(out, json_mode, verb, "not equivalent");
        return 1;
      }
      const json w = to_string(*witness);
      if (json_mode)
        emit(out, json_mode, verb, "equivalent", &w);
      else
        out << w.get<std::string>() << "\n";
    } else if (verb == "apply") {
      require_arity(rest, 2);
      emit(out, json_mode, verb,
           to_string(qi_mobius(parse_matrix(rest[1]), parse_qi(rest[2]))));
    } else if (verb == "decompose") {
      require_arity(rest, 1);
      emit(out, json_mode, verb,
           decomposition_line(decompose(normalize_sign(parse_matrix(rest[1])))));
    } else if (verb == "normal-form") {
      require_arity(rest, 1);
      emit(out, json_mode, verb, to_string(normal_form(parse_matrix(rest[1]))));
    } else if (verb == "reduce") {
      require_arity(rest, 1);
      emit(out, json_mode, verb, to_string(reduce_word(parse_word(rest[1]))));
    } else if (verb == "chain") {
      require_arity(rest, 2);
      const auto links = equivalence_chain(
          normalize_sign(parse_matrix(rest[1])), parse_qi(rest[2]));
      json lines = json::array();
      for (const PeriodicCF& cf : links) lines.push_back(to_string(cf));
      emit(out, json_mode, verb, lines);
    } else if (verb == "selftest") {
      require_arity(rest, 0);
      bool all_ok = true;
      json lines = json::array();
      for (const RelatorCheck& check : relator_selftest()) {
        lines.push_back((check.ok ? "ok   " : "FAIL ") + check.name);
        all_ok = all_ok && check.ok;
      }
      emit(out, json_mode, verb, lines);
      if (!all_ok) return 2;
    } else {
      err << "error: unknown verb '" << verb << "'\n" << kUsage;
      return 2;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace serret
