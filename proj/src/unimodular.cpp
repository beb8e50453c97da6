#include "serret/unimodular.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace serret {

GeneratorWord::GeneratorWord(int e, std::vector<Integer> exponents)
    : e_(e), exponents_(std::move(exponents)) {
  if (e_ != 0 && e_ != 1)
    throw std::domain_error("generator word: e must be 0 or 1");
  if (exponents_.empty())
    throw std::domain_error("generator word: needs at least one exponent");
  if (e_ == 1 && exponents_.size() != 1)
    throw std::domain_error(
        "generator word: V is only allowed with a single exponent block");
  for (std::size_t i = 1; i + 1 < exponents_.size(); ++i)
    if (exponents_[i] < 1)
      throw std::domain_error(
          "generator word: interior exponents must be >= 1");
}

UniModMatrix word_to_matrix(const FreeWord& w) {
  UniModMatrix m = UniModMatrix::identity();
  for (const FreeLetter& letter : w.letters) {
    switch (letter.kind) {
      case FreeLetter::Kind::T:
        m = m * mat_t(letter.exponent);
        break;
      case FreeLetter::Kind::U:
        m = m * mat_u();
        break;
      case FreeLetter::Kind::V:
        m = m * mat_v();
        break;
    }
  }
  return normalize_sign(m);
}

UniModMatrix word_to_matrix(const GeneratorWord& w) {
  UniModMatrix m =
      w.e() == 1 ? mat_v() : UniModMatrix::identity();
  const auto& exps = w.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    m = m * mat_t(exps[i]);
    if (i + 1 < exps.size()) m = m * mat_u();
  }
  return normalize_sign(m);
}

Decomposition decompose(const UniModMatrix& m) {
  if (!m.is_canonical())
    throw std::domain_error("decompose: matrix must be in canonical sign form");

  if (m.c() == 0) {
    // d = 1, so det = a = +-1 and y = a x + b.
    return AffineDecomposition{m.a() == 1 ? 1 : -1, m.b()};
  }

  // Pick the expansion a/c = [a0, ..., a_{n-1}] whose length n satisfies
  // (-1)^n = det. Then a = p_{n-1} and c = q_{n-1} automatically (both
  // fractions are reduced with positive denominator), and r is solved
  // from d = r q_{n-1} + q_{n-2}; b = r p_{n-1} + p_{n-2} follows from
  // the determinant identity.
  const bool even = m.det() == 1;
  FiniteCF terms = rational_expansion_with_parity(m.a(), m.c(), even);
  const ConvergentTable conv{std::span<const Integer>(terms.terms())};
  const long n = conv.count();
  if (conv.p(n - 1) != m.a() || conv.q(n - 1) != m.c())
    throw std::logic_error("decompose: convergent identification failed");
  Integer r = exact_div(m.d() - conv.q(n - 2), m.c());
  if (m.b() != r * conv.p(n - 1) + conv.p(n - 2))
    throw std::logic_error("decompose: residue identification failed");
  return CFDecomposition{terms.terms(), std::move(r)};
}

GeneratorWord normal_form(const UniModMatrix& m) {
  const Decomposition dec = decompose(normalize_sign(m));
  if (const auto* affine = std::get_if<AffineDecomposition>(&dec)) {
    // x + b is T^b; -x + b = v(x - b) is V T^{-b}.
    if (affine->sign == 1) return {0, {affine->shift}};
    return {1, {-affine->shift}};
  }
  const auto& cf = std::get<CFDecomposition>(dec);
  std::vector<Integer> exponents = cf.terms;
  exponents.push_back(cf.r);
  return {0, std::move(exponents)};
}

GeneratorWord reduce_word(const FreeWord& w) {
  return normal_form(word_to_matrix(w));
}

namespace {

FreeWord repeat(const FreeWord& w, int times) {
  FreeWord out;
  for (int i = 0; i < times; ++i)
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

}  // namespace

std::vector<RelatorCheck> relator_selftest() {
  using L = FreeLetter;
  const FreeWord u{{L::u()}};
  const FreeWord v{{L::v()}};
  const FreeWord tv{{L::t(1), L::v()}};
  const FreeWord uv{{L::u(), L::v()}};
  const FreeWord tuv{{L::t(1), L::u(), L::v()}};
  const FreeWord utut2{{L::u(), L::t(1), L::u(), L::t(-2)}};
  const FreeWord utut1{{L::u(), L::t(1), L::u(), L::t(-1)}};

  const UniModMatrix id = UniModMatrix::identity();
  auto is_identity = [&](const FreeWord& w) {
    return projectively_equal(word_to_matrix(w), id);
  };

  std::vector<RelatorCheck> report;
  report.push_back({"U^2", is_identity(repeat(u, 2))});
  report.push_back({"V^2", is_identity(repeat(v, 2))});
  report.push_back({"(TV)^2", is_identity(repeat(tv, 2))});
  report.push_back({"(UV)^2", is_identity(repeat(uv, 2))});
  report.push_back({"(TUV)^3", is_identity(repeat(tuv, 3))});
  report.push_back({"(UTUT^-2)^2", is_identity(repeat(utut2, 2))});
  report.push_back({"(UTUT^-1)^3", is_identity(repeat(utut1, 3))});

  // V elimination: UV = T^-1 U T U T^-1.
  const FreeWord rhs{{L::t(-1), L::u(), L::t(1), L::u(), L::t(-1)}};
  report.push_back({"UV = T^-1 U T U T^-1",
                    projectively_equal(word_to_matrix(uv),
                                       word_to_matrix(rhs))});
  return report;
}

namespace {

// x = (p_{i-1} x_i + p_{i-2}) / (q_{i-1} x_i + q_{i-2}): the matrix
// carrying the i-th complete quotient back to the value.
UniModMatrix convergent_matrix(const PeriodicCF& cf, std::size_t count) {
  ConvergentTable conv;
  for (std::size_t k = 0; k < count; ++k) conv.push(cf.term_at(k));
  const long n = static_cast<long>(count);
  return {conv.p(n - 1), conv.p(n - 2), conv.q(n - 1), conv.q(n - 2)};
}

}  // namespace

std::optional<UniModMatrix> serret_equivalent(const QuadraticIrrational& x,
                                              const QuadraticIrrational& y) {
  const PeriodicCF cf_x = expand(x);
  const PeriodicCF cf_y = expand(y);
  const auto match = tail_match(cf_x, cf_y);
  if (!match) return std::nullopt;
  const auto [i, j] = *match;

  const UniModMatrix mx = convergent_matrix(cf_x, i);
  const UniModMatrix my = convergent_matrix(cf_y, j);
  const UniModMatrix m = normalize_sign(my * mx.inverse());
  if (!qi_equal(qi_mobius(m, x), y))
    throw std::logic_error("serret_equivalent: witness does not map x to y");
  return m;
}

std::vector<PeriodicCF> equivalence_chain(const UniModMatrix& m,
                                          const QuadraticIrrational& x) {
  if (!m.is_canonical() || m.c() <= 0)
    throw std::domain_error("equivalence_chain: matrix must be canonical with c > 0");
  const Decomposition decomposition = decompose(m);
  const auto& dec = std::get<CFDecomposition>(decomposition);

  // y = [a0, ..., a_{n-1}, x + r]; peeling a_k maps v to 1/(v - a_k), so
  // the values step down the decomposition to x + r and finally to x.
  // Each step is a translation plus an inversion, both tail-preserving.
  std::vector<PeriodicCF> chain;
  chain.push_back(expand(qi_mobius(m, x)));
  for (const Integer& term : dec.terms)
    chain.push_back(invert(translate(chain.back(), -term)));
  if (dec.r != 0) chain.push_back(translate(chain.back(), -dec.r));
  return chain;
}

}  // namespace serret
