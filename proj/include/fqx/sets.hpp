#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqx/poly.hpp"

namespace fqx {

// Membership table for a subset of the truncated universe {f : deg f < D},
// indexed by canonical_index. Immutable in spirit: set operations return
// new tables and require matching (spec, D).
class TruncatedSet {
public:
  TruncatedSet(const Field& F, int D, long long cap = kDefaultUniverseCap);

  const FieldSpec& spec() const { return spec_; }
  int D() const { return D_; }
  long long size() const { return size_; }

  bool test(long long idx) const { return bits_[idx]; }
  void set(long long idx, bool v = true) { bits_[idx] = v; }
  long long count() const;

  TruncatedSet united(const TruncatedSet& o) const;
  TruncatedSet intersected(const TruncatedSet& o) const;
  TruncatedSet complemented() const;
  bool subset_of(const TruncatedSet& o) const;

  std::vector<long long> members() const;

  static TruncatedSet full(const Field& F, int D);
  // The truncated ideal <X^m>: all f with coefficients 0 below degree m.
  static TruncatedSet ideal(const Field& F, int m, int D);

private:
  void check_compatible(const TruncatedSet& o) const;

  FieldSpec spec_;
  int D_;
  long long size_;
  std::vector<char> bits_;
};

// A union of cosets of <X^m> given by residues of degree < m, adjusted by
// finite exception lists.
struct CosetStructure {
  int m = 0;
  std::vector<Poly> residues;
  std::vector<Poly> exceptions_removed;  // in some coset but not in the set
  std::vector<Poly> exceptions_added;    // in the set though not in any coset

  bool contains(const Poly& f, const Field& F) const;
  TruncatedSet realize(const Field& F, int D) const;
  bool has_zero_residue() const;
};

// Finitely represented subset of {0, ..., D-1}.
struct NatSet {
  std::vector<char> member;  // index n < D

  bool test(int n) const { return n < int(member.size()) && member[n]; }

  static NatSet evens(int D);
  static NatSet from_list(const std::vector<int>& ns, int D);
  // All finite nonempty subset sums of gens, truncated below D.
  static NatSet finite_sums(const std::vector<int>& gens, int D);
};

enum class SemigroupOp { Additive, Multiplicative };

struct FsResult {
  TruncatedSet set;
  long long overflow = 0;  // subset sums/products with deg >= D
};

// All sums (or products) over nonempty subsets of gens. Multiplicative mode
// rejects the zero polynomial.
FsResult fs_set(const std::vector<Poly>& gens, SemigroupOp op, const Field& F,
                int D);

// Ordered differences {x_n - x_m : m < n} of a sequence with >= 2 entries.
TruncatedSet delta_set(const std::vector<Poly>& seq, const Field& F, int D);

// Finite T of translates with deg < m_max such that the union of -t + A
// covers the universe; nullopt when no such cover exists. Greedy cover,
// deterministic (lowest-index candidate wins ties).
std::optional<std::vector<Poly>> is_syndetic(const TruncatedSet& A,
                                             int m_max, const Field& F);

struct ThickResult {
  bool thick = false;
  std::optional<Poly> witness;            // g with g + {deg < e} inside A
  std::vector<Poly> failing_config;       // the block, when not thick
};

// Thickness at configuration degree e, checked against the full block
// {deg < e} (the block dominates all of its subsets).
ThickResult is_thick(const TruncatedSet& A, int e, const Field& F);

// Least m <= D such that the truncated ideal <X^m> lies inside A up to at
// most max_exceptions elements. By the additive theory of F_q[X] this is
// exactly the IP*-characterization at truncation.
std::optional<CosetStructure> ipstar_proxy(const TruncatedSet& A,
                                           long long max_exceptions,
                                           const Field& F);

struct Obstruction {
  std::vector<int> indices;  // 1-based positions into the candidate sequence
  Poly sum;                  // lies in <X^m>, hence outside the zero-free union
};

// For a zero-free coset union A and a long enough injective sequence inside
// A, extracts p terms sharing a residue class; their sum falls into <X^m>,
// which A misses.
Obstruction ip_obstruction(const CosetStructure& A,
                           const std::vector<Poly>& candidate_seq,
                           const Field& F);

struct IpSearchResult {
  bool found = false;
  std::vector<Poly> generators;     // all 2^k - 1 nonempty subset sums in A
  long long tuples_examined = 0;
};

// Depth-first search in canonical order for k distinct nonzero generators
// whose nonempty subset sums all lie in A. Certifies only "IP at depth k".
IpSearchResult is_ip_truncated(const TruncatedSet& A, int k, const Field& F);

struct RamseyResult {
  std::string color;                // "in" or "out"
  std::vector<int> subsequence;     // indices into seq, increasing
};

// Monochromatic refinement: a subsequence whose pairwise differences
// (later minus earlier) are all in S or all outside S, via exact maximum
// clique search on the 2-colored difference graph. Throws with the best
// length found when target_len is unachievable.
RamseyResult ramsey_refine(const std::vector<Poly>& seq, const TruncatedSet& S,
                           int target_len, const Field& F);

// {f != 0 : deg f in C}; the zero polynomial has no degree and the
// multiplicative semigroup excludes it.
TruncatedSet deg_pullback(const NatSet& C, const Field& F, int D);

struct CentralNecessaryResult {
  bool piecewise_syndetic = false;
  std::optional<Poly> thick_witness;
};

// Necessary-condition proxy for central sets: A is piecewise syndetic at
// truncation if the union of all translates -t + A (deg t < m_max) is
// thick at configuration degree e. Central-ness itself quantifies over
// minimal idempotent ultrafilters and is not finitely decidable.
CentralNecessaryResult central_necessary(const TruncatedSet& A, int m_max,
                                         int e, const Field& F);

// Multiplicative-cover analogue of is_syndetic for subsets of the
// truncated multiplicative semigroup: nonzero translates t with deg t <
// m_max such that every nonzero u has t*u in A for some t (products that
// leave the truncation do not count as covering).
std::optional<std::vector<Poly>> is_syndetic_mult(const TruncatedSet& A,
                                                  int m_max, const Field& F);

// Set-definition text format, one directive per line, stack discipline:
//   ideal m
//   coset m r0,r1,...        (residues as canonical indices, deg < m)
//   explicit i1,i2,...
//   pullback-even
//   union                    (pops two, pushes union)
//   complement               (pops one)
// The final stack must hold exactly one set.
TruncatedSet parse_set_program(const std::string& text, const Field& F, int D);

}  // namespace fqx
