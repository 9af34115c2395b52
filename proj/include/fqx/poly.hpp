#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqx/field.hpp"

namespace fqx {

// Dense univariate polynomial over F_q. coeffs[i] is the rep of the
// coefficient of X^i; no trailing zeros are stored, so the zero polynomial
// is the empty list. deg(0) is deliberately not an integer: degree()
// returns nullopt for it and callers must treat that case explicitly.
struct Poly {
  std::vector<int> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::optional<int> degree() const {
    if (coeffs.empty()) return std::nullopt;
    return int(coeffs.size()) - 1;
  }
  int coeff(int i) const {
    return i < int(coeffs.size()) ? coeffs[i] : 0;
  }
  bool operator==(const Poly& o) const = default;
  bool operator<(const Poly& o) const {  // for ordered containers
    return coeffs < o.coeffs;
  }

  static Poly zero() { return {}; }
  static Poly constant(int rep) { return rep == 0 ? Poly{} : Poly{{rep}}; }
  // X^k with unit coefficient.
  static Poly monomial(int k, int rep = 1);
  // Trims trailing zeros.
  static Poly from_coeffs(std::vector<int> c);
};

Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly neg(const Poly& a, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
Poly scalar_mul(int c, const Poly& a, const Field& F);

// Exact division with remainder: g = f*h + r with r = 0 or deg r < deg f.
// Throws on f = 0 ("zero divisor").
std::pair<Poly, Poly> poly_divmod(const Poly& g, const Poly& f, const Field& F);

// Coefficients of f below degree m (the residue of f modulo X^m).
Poly truncate_below(const Poly& f, int m);

// --- canonical enumeration of the truncated universe {f : deg f < D} ---

inline constexpr long long kDefaultUniverseCap = 1ll << 22;

long long universe_size(const Field& F, int D, long long cap = kDefaultUniverseCap);

// Bijection onto [0, q^D): idx = sum_i rep(c_i) * q^i.
long long canonical_index(const Poly& f, const Field& F, int D);
Poly poly_from_index(long long idx, const Field& F, int D);

// All q^D polynomials with deg < D in canonical index order.
std::vector<Poly> enumerate_polys(const Field& F, int D,
                                  long long cap = kDefaultUniverseCap);

// --- text codec: comma-separated reps, ascending degree ("1,0,1" = 1 + X^2) ---

std::string poly_to_string(const Poly& f);
Poly poly_parse(const std::string& s, const Field& F);

// Human-readable rendering ("1+X^2"); never used in machine paths.
std::string poly_pretty(const Poly& f);

}  // namespace fqx
