#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fqx/multipoly.hpp"

namespace fqx {

// Generators f_1(X_{i_1}), ..., f_k(X_{i_k}) of an ideal in F_q[X_1..X_n]:
// each generator is univariate in its own variable, variable indices are
// distinct, no generator is zero, and at most one is constant (a nonzero
// constant makes the ideal the whole ring).
struct IdealGens {
  int nvars = 0;
  std::vector<std::pair<int, Poly>> gens;  // (variable index, f_i)

  static IdealGens make(int nvars, std::vector<std::pair<int, Poly>> gens);

  // Size of the remainder space q^(prod deg f_i), clamped at `cap`.
  long long remainder_space(const Field& F, long long cap = 1ll << 30) const;
};

// Exact division result: input = sum_i f_i * quotients[i] + remainder,
// with deg_{X_i}(remainder) < deg f_i for every generator variable.
struct Reduction {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

// Multivariate reduction by univariate generators in disjoint variables.
// Variables are reduced in ascending generator order; since each division
// step touches only its own variable the result is confluent, so the
// remainder is a canonical normal form and remainder == 0 decides ideal
// membership exactly.
Reduction reduce(const MultiPoly& g, const IdealGens& gens, const Field& F);

bool ideal_member(const MultiPoly& g, const IdealGens& gens, const Field& F);

// A finite index set F into the scanned sequence with sum_{n in F} g_n in
// the ideal. Indices are 1-based scan positions. Either a single term with
// remainder 0, or p terms with equal remainders (p copies of any remainder
// sum to zero in characteristic p).
struct Witness {
  enum class Card { Singleton, PFold };
  std::vector<int> indices;
  MultiPoly sum;
  Card card = Card::Singleton;
};

using MultiPolyStream = std::function<std::optional<MultiPoly>()>;

// Scans the sequence, bucketing terms by reduced remainder, and returns the
// first completed witness in scan order. Throws (with the remainder census)
// if the stream ends or scan_cap distinct terms pass without a witness;
// with scan_cap >= (p-1)*remainder_space + 1 and an injective sequence this
// cannot happen.
Witness ip_witness(const MultiPolyStream& seq, const IdealGens& gens,
                   const Field& F, int scan_cap);
Witness ip_witness(const std::vector<MultiPoly>& seq, const IdealGens& gens,
                   const Field& F, int scan_cap);

}  // namespace fqx
