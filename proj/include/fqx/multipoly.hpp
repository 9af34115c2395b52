#pragma once

#include <map>
#include <string>
#include <vector>

#include "fqx/poly.hpp"

namespace fqx {

// Sparse k-variate polynomial over F_q: exponent tuple -> nonzero rep.
// All tuples have length nvars; zero coefficients are never stored.
struct MultiPoly {
  int nvars = 0;
  std::map<std::vector<int>, int> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const MultiPoly& o) const = default;
  bool operator<(const MultiPoly& o) const {
    return terms < o.terms;  // nvars assumed equal in ordered use
  }

  // Largest exponent of variable var across all terms; 0 for the zero poly.
  int degree_in(int var) const;

  static MultiPoly zero(int nvars) { return MultiPoly{nvars, {}}; }
  static MultiPoly constant(int nvars, int rep);
  // Univariate f placed into variable var of an nvars-variate ring.
  static MultiPoly from_univariate(const Poly& f, int var, int nvars);
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b, const Field& F);
MultiPoly sub(const MultiPoly& a, const MultiPoly& b, const Field& F);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b, const Field& F);
// Single-term multiply: c * X^expo * a.
MultiPoly term_mul(int c, const std::vector<int>& expo, const MultiPoly& a,
                   const Field& F);

// Text codec: semicolon-separated "coef@e1,e2,...,ek" terms; "0" is the
// zero polynomial. Example over F_2[X1,X2]: "1@1,1;1@0,0" = X1*X2 + 1.
std::string multipoly_to_string(const MultiPoly& m);
MultiPoly multipoly_parse(const std::string& s, int nvars, const Field& F);

}  // namespace fqx
