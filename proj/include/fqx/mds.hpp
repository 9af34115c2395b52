#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqx/rational.hpp"
#include "fqx/sets.hpp"

namespace fqx {

enum class SystemKind { Translation, Bernoulli, Pullback };

inline constexpr long long kDefaultStateCap = 1ll << 16;

// Finite probability space carrying an action of the truncated semigroup.
// Weights are exact rationals; every T_f is a weight-preserving permutation
// of the states wherever it is defined.
//
//   translation(m): states are F_q[x]/<X^m> with uniform weights, T_f adds
//     f mod X^m; defined for every f.
//   bernoulli(alphabet, window): states are maps {deg < window} -> alphabet
//     under the product measure; T_f shifts coordinates by f. The explicit
//     permutation exists for deg f < window; beyond that the shifted
//     coordinate block leaves the window and correlations fall back to the
//     exact product law.
//   pullback(base_perm, base_weights): multiplicative action T_f = base^(deg f),
//     defined for f != 0.
struct FiniteMDS {
  FieldSpec spec;
  SystemKind kind = SystemKind::Translation;
  long long n_states = 0;
  std::vector<Rat> weights;

  int m = 0;                      // translation
  int alphabet = 0, window = 0;   // bernoulli
  std::vector<Rat> sym_weights;   // bernoulli, per symbol
  std::vector<int> base_perm;     // pullback
  std::vector<int> base_inv;      // pullback, inverse permutation

  bool additive() const { return kind != SystemKind::Pullback; }
  // Whether T_f is realized as a state permutation.
  bool perm_defined(const Poly& f) const;
  // T_f applied to a state; requires perm_defined(f).
  long long apply(const Poly& f, long long state, const Field& F) const;
  // T_f^{-1} applied to a state.
  long long apply_inv(const Poly& f, long long state, const Field& F) const;
};

FiniteMDS build_translation(const Field& F, int m,
                            long long cap = kDefaultStateCap);
FiniteMDS build_bernoulli(const Field& F, int alphabet, int window,
                          long long cap = kDefaultStateCap,
                          std::vector<Rat> sym_weights = {});
FiniteMDS build_pullback(const Field& F, std::vector<int> base_perm,
                         std::vector<Rat> base_weights);

// Subset of states.
struct EventSet {
  std::vector<char> members;

  Rat measure(const FiniteMDS& sys) const;
  static EventSet from_indices(const FiniteMDS& sys,
                               const std::vector<long long>& idx);
  static EventSet all(const FiniteMDS& sys);
};

// Exact mu(A intersect T_f B).
Rat correlation(const FiniteMDS& sys, const EventSet& A, const EventSet& B,
                const Poly& f, const Field& F);

// A single Bernoulli cylinder: conjunction of coordinate constraints.
// Coordinates are arbitrary polynomials, so shifted supports need no
// truncation; this is the exact path for systems too large to enumerate.
struct Cylinder {
  std::vector<std::pair<Poly, int>> constraints;  // (coordinate, symbol)
};

Rat cylinder_measure(const Cylinder& c, const std::vector<Rat>& sym_weights);
// mu(A intersect T_f B) by merging constraint supports; conflicting merged
// constraints give measure zero, otherwise the product of symbol weights.
Rat cylinder_correlation(const Cylinder& A, const Cylinder& B, const Poly& f,
                         const std::vector<Rat>& sym_weights, const Field& F);
// Realize a cylinder as a state subset of an explicit Bernoulli system.
EventSet cylinder_to_event(const FiniteMDS& sys, const Cylinder& c,
                           const Field& F);

// Per-f correlation table over the truncated acting set, with the good set
// G_eps = {f : |mu(A cap T_f B) - mu(A)mu(B)| < eps}.
struct CorrelationReport {
  std::vector<std::optional<Rat>> values;  // by canonical index; nullopt = excluded
  Rat product;
  Rat eps;
  TruncatedSet good;
  long long excluded = 0;  // f outside the acting set (f = 0, pullback kind)
};

CorrelationReport correlation_set(const FiniteMDS& sys, const EventSet& A,
                                  const EventSet& B, const Rat& eps, int D,
                                  const Field& F);

// Three independent truncated verdicts on the good set; evidence for the
// strong / mild / weak mixing chain, not proof of the untruncated notions.
struct MixingReport {
  CorrelationReport corr;
  // (a) cofinite within truncation: complement confined to deg < band.
  bool cofinite = false;
  int cofinite_band = 0;
  std::vector<long long> complement;  // canonical indices of bad f
  // (b) IP*-proxy via the least contained ideal.
  std::optional<CosetStructure> ipstar;
  // (c) syndetic cover plus the piecewise-syndetic necessary condition.
  std::optional<std::vector<Poly>> syndetic_cover;
  CentralNecessaryResult central;
};

struct ClassifyParams {
  long long ipstar_exceptions = 0;
  int cofinite_band = -1;   // default D - 2
  int syndetic_m_max = -1;  // default min(D, 3)
  int thick_e = -1;         // default min(D - 1, 2)
};

MixingReport classify_mixing(const FiniteMDS& sys, const EventSet& A,
                             const EventSet& B, const Rat& eps, int D,
                             const Field& F, ClassifyParams params = {});

// Khintchine recurrence set {f : mu of the joint intersection exceeds
// mu(A)^(k+1) - eps}, with a syndetic verdict in the acting semigroup.
struct KhintchineReport {
  TruncatedSet set;
  std::vector<std::optional<Rat>> values;  // nullopt = excluded/overflow
  Rat threshold;
  long long overflow = 0;
  std::optional<std::vector<Poly>> syndetic_cover;
};

// Additive form: intersection over i of T_{c_i f} A. Acting f whose image
// c_i*f leaves the truncated universe are counted as overflow and excluded.
KhintchineReport khintchine_additive(const FiniteMDS& sys, const EventSet& A,
                                     const std::vector<Poly>& coeffs,
                                     const Rat& eps, int D, const Field& F,
                                     int syndetic_m_max = -1);
// Multiplicative powers form on a pullback system: A cap T_f A cap ... cap
// T_{f^k} A; f = 0 is excluded, f with k*deg f >= D overflow.
KhintchineReport khintchine_multiplicative(const FiniteMDS& sys,
                                           const EventSet& A, int k,
                                           const Rat& eps, int D,
                                           const Field& F,
                                           int syndetic_m_max = -1);

// Exhaustive sanity check: every defined T_f is a weight-preserving
// permutation, and additive kinds satisfy the action law within truncation.
void verify_measure_preserving(const FiniteMDS& sys, int D, const Field& F);

// System spec files: JSON {kind, p, e, modulus, D, params, caps}.
struct SystemConfig {
  SystemKind kind = SystemKind::Translation;
  int p = 2, e = 1;
  std::vector<int> modulus;
  int D = 4;
  long long state_cap = kDefaultStateCap;
  int m = 0;
  int alphabet = 0, window = 0;
  std::vector<int> base_perm;
  std::vector<std::string> base_weights;  // rationals as "a/b"
};

SystemConfig parse_system_json(const std::string& text);
FiniteMDS build_system(const SystemConfig& cfg, const Field& F);

}  // namespace fqx
