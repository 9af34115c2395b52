#include "fqx/sets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fqx {

TruncatedSet::TruncatedSet(const Field& F, int D, long long cap)
    : spec_(F.spec()), D_(D), size_(universe_size(F, D, cap)), bits_(size_, 0) {}

long long TruncatedSet::count() const {
  return std::count(bits_.begin(), bits_.end(), char(1));
}

void TruncatedSet::check_compatible(const TruncatedSet& o) const {
  if (!(spec_ == o.spec_) || D_ != o.D_)
    throw Error("truncated-set operands disagree on (field, D)");
}

TruncatedSet TruncatedSet::united(const TruncatedSet& o) const {
  check_compatible(o);
  TruncatedSet r = *this;
  for (long long i = 0; i < size_; ++i) r.bits_[i] |= o.bits_[i];
  return r;
}

TruncatedSet TruncatedSet::intersected(const TruncatedSet& o) const {
  check_compatible(o);
  TruncatedSet r = *this;
  for (long long i = 0; i < size_; ++i) r.bits_[i] &= o.bits_[i];
  return r;
}

TruncatedSet TruncatedSet::complemented() const {
  TruncatedSet r = *this;
  for (long long i = 0; i < size_; ++i) r.bits_[i] ^= 1;
  return r;
}

bool TruncatedSet::subset_of(const TruncatedSet& o) const {
  check_compatible(o);
  for (long long i = 0; i < size_; ++i)
    if (bits_[i] && !o.bits_[i]) return false;
  return true;
}

std::vector<long long> TruncatedSet::members() const {
  std::vector<long long> m;
  for (long long i = 0; i < size_; ++i)
    if (bits_[i]) m.push_back(i);
  return m;
}

TruncatedSet TruncatedSet::full(const Field& F, int D) {
  TruncatedSet s(F, D);
  for (long long i = 0; i < s.size_; ++i) s.bits_[i] = 1;
  return s;
}

TruncatedSet TruncatedSet::ideal(const Field& F, int m, int D) {
  if (m < 0 || m > D) throw Error("ideal exponent out of range");
  TruncatedSet s(F, D);
  long long qm = 1;
  for (int i = 0; i < m; ++i) qm *= F.q();
  // f in <X^m> iff its canonical index is a multiple of q^m.
  for (long long i = 0; i < s.size_; i += qm) s.bits_[i] = 1;
  return s;
}

bool CosetStructure::contains(const Poly& f, const Field& F) const {
  for (const auto& x : exceptions_added)
    if (x == f) return true;
  for (const auto& x : exceptions_removed)
    if (x == f) return false;
  const Poly r = truncate_below(f, m);
  return std::find(residues.begin(), residues.end(), r) != residues.end();
}

TruncatedSet CosetStructure::realize(const Field& F, int D) const {
  if (m > D) throw Error("coset modulus degree exceeds universe bound");
  TruncatedSet s(F, D);
  for (long long i = 0; i < s.size(); ++i)
    if (contains(poly_from_index(i, F, D), F)) s.set(i);
  return s;
}

bool CosetStructure::has_zero_residue() const {
  return std::find(residues.begin(), residues.end(), Poly::zero()) != residues.end();
}

NatSet NatSet::evens(int D) {
  NatSet s;
  s.member.assign(D, 0);
  for (int n = 0; n < D; n += 2) s.member[n] = 1;
  return s;
}

NatSet NatSet::from_list(const std::vector<int>& ns, int D) {
  NatSet s;
  s.member.assign(D, 0);
  for (int n : ns)
    if (n >= 0 && n < D) s.member[n] = 1;
  return s;
}

NatSet NatSet::finite_sums(const std::vector<int>& gens, int D) {
  NatSet s;
  s.member.assign(D, 0);
  const size_t k = gens.size();
  if (k > 20) throw Error("too many generators for subset enumeration");
  for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
    long long sum = 0;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t(1) << i)) sum += gens[i];
    if (sum >= 0 && sum < D) s.member[sum] = 1;
  }
  return s;
}

FsResult fs_set(const std::vector<Poly>& gens, SemigroupOp op, const Field& F,
                int D) {
  if (gens.empty()) throw Error("fs_set needs at least one generator");
  if (gens.size() > 20) throw Error("too many generators for subset enumeration");
  if (op == SemigroupOp::Multiplicative)
    for (const auto& g : gens)
      if (g.is_zero()) throw Error("zero polynomial in multiplicative mode");
  FsResult res{TruncatedSet(F, D), 0};
  const size_t k = gens.size();
  for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
    Poly acc = (op == SemigroupOp::Additive) ? Poly::zero() : Poly::constant(1);
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t(1) << i))
        acc = (op == SemigroupOp::Additive) ? add(acc, gens[i], F)
                                            : mul(acc, gens[i], F);
    if (!acc.is_zero() && *acc.degree() >= D) {
      ++res.overflow;
    } else {
      res.set.set(canonical_index(acc, F, D));
    }
  }
  return res;
}

TruncatedSet delta_set(const std::vector<Poly>& seq, const Field& F, int D) {
  std::set<Poly> distinct(seq.begin(), seq.end());
  if (distinct.size() < 2)
    throw Error("difference set needs at least 2 distinct entries");
  TruncatedSet s(F, D);
  for (size_t n = 1; n < seq.size(); ++n)
    for (size_t m = 0; m < n; ++m) {
      const Poly d = sub(seq[n], seq[m], F);
      s.set(canonical_index(d, F, D));
    }
  return s;
}

std::optional<std::vector<Poly>> is_syndetic(const TruncatedSet& A,
                                             int m_max, const Field& F) {
  if (m_max > A.D()) throw Error("m_max exceeds universe bound");
  const long long n = A.size();
  const long long ncand = universe_size(F, m_max, 1ll << 12);
  // u is covered by translate t iff t + u lies in A.
  auto covers = [&](long long t, long long u) {
    const Poly s =
        add(poly_from_index(t, F, m_max), poly_from_index(u, F, A.D()), F);
    return A.test(canonical_index(s, F, A.D()));
  };
  for (long long u = 0; u < n; ++u) {
    bool any = false;
    for (long long t = 0; t < ncand && !any; ++t) any = covers(t, u);
    if (!any) return std::nullopt;
  }
  // Greedy cover; ties broken toward the lower candidate index.
  std::vector<char> uncovered(n, 1);
  long long left = n;
  std::vector<Poly> T;
  while (left > 0) {
    long long best = -1, best_gain = 0;
    for (long long t = 0; t < ncand; ++t) {
      long long gain = 0;
      for (long long u = 0; u < n; ++u) gain += uncovered[u] && covers(t, u);
      if (gain > best_gain) { best_gain = gain; best = t; }
    }
    for (long long u = 0; u < n; ++u)
      if (uncovered[u] && covers(best, u)) { uncovered[u] = 0; --left; }
    T.push_back(poly_from_index(best, F, m_max));
  }
  return T;
}

ThickResult is_thick(const TruncatedSet& A, int e, const Field& F) {
  if (e > A.D() - 1) throw Error("configuration degree bound exceeds D-1");
  const long long block = universe_size(F, e);
  std::vector<Poly> config;
  config.reserve(block);
  for (long long b = 0; b < block; ++b) config.push_back(poly_from_index(b, F, e));
  for (long long g = 0; g < A.size(); ++g) {
    const Poly gp = poly_from_index(g, F, A.D());
    bool all = true;
    for (const auto& x : config) {
      const long long idx = canonical_index(add(gp, x, F), F, A.D());
      if (!A.test(idx)) { all = false; break; }
    }
    if (all) return ThickResult{true, gp, {}};
  }
  return ThickResult{false, std::nullopt, config};
}

std::optional<CosetStructure> ipstar_proxy(const TruncatedSet& A,
                                           long long max_exceptions,
                                           const Field& F) {
  for (int m = 0; m <= A.D(); ++m) {
    long long qm = 1;
    for (int i = 0; i < m; ++i) qm *= F.q();
    std::vector<Poly> missing;
    bool ok = true;
    for (long long i = 0; i < A.size(); i += qm) {
      if (!A.test(i)) {
        missing.push_back(poly_from_index(i, F, A.D()));
        if ((long long)missing.size() > max_exceptions) { ok = false; break; }
      }
    }
    if (ok) {
      CosetStructure c;
      c.m = m;
      c.residues = {Poly::zero()};
      c.exceptions_removed = std::move(missing);
      return c;
    }
  }
  return std::nullopt;
}

Obstruction ip_obstruction(const CosetStructure& A,
                           const std::vector<Poly>& candidate_seq,
                           const Field& F) {
  if (A.has_zero_residue())
    throw Error("obstruction applies only to zero-free coset unions");
  const long long need = (F.p() - 1) * (long long)A.residues.size() + 1;
  if ((long long)candidate_seq.size() < need)
    throw Error("candidate sequence shorter than pigeonhole bound " +
                std::to_string(need));
  std::set<Poly> seen;
  std::map<Poly, std::vector<int>> buckets;
  for (int n = 0; n < int(candidate_seq.size()); ++n) {
    const Poly& g = candidate_seq[n];
    if (!seen.insert(g).second)
      throw Error("candidate sequence is not injective");
    if (!A.contains(g, F))
      throw Error("candidate sequence leaves the set at position " +
                  std::to_string(n + 1));
    auto& b = buckets[truncate_below(g, A.m)];
    b.push_back(n + 1);
    if (int(b.size()) == F.p()) {
      Obstruction o;
      o.indices = b;
      o.sum = Poly::zero();
      for (int idx : b) o.sum = add(o.sum, candidate_seq[idx - 1], F);
      // p equal residues sum to residue 0, so the sum lies in <X^m>.
      if (!truncate_below(o.sum, A.m).is_zero())
        throw Error("internal: obstruction sum has nonzero residue");
      if (A.contains(o.sum, F)) continue;  // swallowed by an added exception
      return o;
    }
  }
  throw Error("no completed residue class in candidate sequence");
}

IpSearchResult is_ip_truncated(const TruncatedSet& A, int k, const Field& F) {
  if (k < 1 || k > 4) throw Error("depth must be in [1,4]");
  IpSearchResult res;
  const long long n = A.size();
  std::vector<long long> gens;          // canonical indices of chosen generators
  std::vector<long long> sums;          // indices of all nonempty subset sums so far
  // Sum of two universe elements, by index.
  auto idx_add = [&](long long a, long long b) {
    return canonical_index(
        add(poly_from_index(a, F, A.D()), poly_from_index(b, F, A.D()), F), F,
        A.D());
  };
  std::function<bool(long long)> dfs = [&](long long start) -> bool {
    if (int(gens.size()) == k) return true;
    for (long long g = start; g < n; ++g) {
      if (g == 0) continue;  // the zero polynomial is a degenerate generator
      if (!A.test(g)) continue;
      ++res.tuples_examined;
      bool ok = true;
      std::vector<long long> added{g};
      for (long long s : sums) {
        const long long t = idx_add(s, g);
        if (!A.test(t)) { ok = false; break; }
        added.push_back(t);
      }
      if (!ok) continue;
      gens.push_back(g);
      sums.insert(sums.end(), added.begin(), added.end());
      if (dfs(g + 1)) return true;
      gens.pop_back();
      sums.resize(sums.size() - added.size());
    }
    return false;
  };
  if (dfs(1)) {
    res.found = true;
    for (long long g : gens) res.generators.push_back(poly_from_index(g, F, A.D()));
  }
  return res;
}

RamseyResult ramsey_refine(const std::vector<Poly>& seq, const TruncatedSet& S,
                           int target_len, const Field& F) {
  const int n = int(seq.size());
  if (n > 30) throw Error("sequence too long for exact clique search");
  if (target_len < 1) throw Error("target length must be positive");
  // Edge color of (m,n), m < n: whether x_n - x_m lies in S.
  std::vector<uint32_t> in_adj(n, 0), out_adj(n, 0);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < b; ++a) {
      const Poly d = sub(seq[b], seq[a], F);
      const bool in = S.test(canonical_index(d, F, S.D()));
      (in ? in_adj : out_adj)[a] |= 1u << b;
      (in ? in_adj : out_adj)[b] |= 1u << a;
    }
  auto max_clique = [&](const std::vector<uint32_t>& adj) {
    uint32_t best = 0;
    std::function<void(uint32_t, uint32_t)> go = [&](uint32_t cur, uint32_t cand) {
      if (std::popcount(cur) + std::popcount(cand) <= std::popcount(best)) return;
      if (cand == 0) {
        if (std::popcount(cur) > std::popcount(best)) best = cur;
        return;
      }
      const int v = std::countr_zero(cand);
      go(cur | (1u << v), cand & adj[v] & ~((1u << (v + 1)) - 1));
      go(cur, cand & ~(1u << v));
    };
    go(0, (n == 32) ? ~0u : ((1u << n) - 1));
    return best;
  };
  const uint32_t in_best = max_clique(in_adj);
  const uint32_t out_best = max_clique(out_adj);
  const uint32_t pick =
      std::popcount(in_best) >= std::popcount(out_best) ? in_best : out_best;
  const bool in_color = std::popcount(in_best) >= std::popcount(out_best);
  if (std::popcount(pick) < target_len)
    throw Error("no monochromatic subsequence of length " +
                std::to_string(target_len) + "; best found " +
                std::to_string(std::popcount(pick)));
  RamseyResult r;
  r.color = in_color ? "in" : "out";
  for (int i = 0; i < n; ++i)
    if (pick & (1u << i)) r.subsequence.push_back(i);
  return r;
}

TruncatedSet deg_pullback(const NatSet& C, const Field& F, int D) {
  TruncatedSet s(F, D);
  for (long long i = 1; i < s.size(); ++i) {
    const auto d = poly_from_index(i, F, D).degree();
    if (d && C.test(*d)) s.set(i);
  }
  return s;
}

CentralNecessaryResult central_necessary(const TruncatedSet& A, int m_max,
                                         int e, const Field& F) {
  // Union of all translates -t + A over deg t < m_max: u belongs iff some
  // t + u lies in A. Existence of a syndetic-inside-thick witness only
  // grows with the translate set, so using all candidates is exact.
  TruncatedSet B(F, A.D());
  const long long ncand = universe_size(F, m_max, 1ll << 12);
  for (long long u = 0; u < A.size(); ++u) {
    const Poly up = poly_from_index(u, F, A.D());
    for (long long t = 0; t < ncand; ++t) {
      const Poly s = add(poly_from_index(t, F, m_max), up, F);
      if (A.test(canonical_index(s, F, A.D()))) { B.set(u); break; }
    }
  }
  const ThickResult th = is_thick(B, e, F);
  return CentralNecessaryResult{th.thick, th.witness};
}

std::optional<std::vector<Poly>> is_syndetic_mult(const TruncatedSet& A,
                                                  int m_max, const Field& F) {
  const long long n = A.size();
  const long long ncand = universe_size(F, m_max, 1ll << 12);
  auto covers = [&](long long t, long long u) {
    const Poly prod = mul(poly_from_index(t, F, m_max), poly_from_index(u, F, A.D()), F);
    if (!prod.is_zero() && *prod.degree() >= A.D()) return false;
    return A.test(canonical_index(prod, F, A.D()));
  };
  for (long long u = 1; u < n; ++u) {
    bool any = false;
    for (long long t = 1; t < ncand && !any; ++t) any = covers(t, u);
    if (!any) return std::nullopt;
  }
  std::vector<char> uncovered(n, 1);
  uncovered[0] = 0;  // zero is not in the multiplicative semigroup
  long long left = n - 1;
  std::vector<Poly> T;
  while (left > 0) {
    long long best = -1, best_gain = 0;
    for (long long t = 1; t < ncand; ++t) {
      long long gain = 0;
      for (long long u = 1; u < n; ++u) gain += uncovered[u] && covers(t, u);
      if (gain > best_gain) { best_gain = gain; best = t; }
    }
    if (best < 0) return std::nullopt;
    for (long long u = 1; u < n; ++u)
      if (uncovered[u] && covers(best, u)) { uncovered[u] = 0; --left; }
    T.push_back(poly_from_index(best, F, m_max));
  }
  return T;
}

TruncatedSet parse_set_program(const std::string& text, const Field& F, int D) {
  std::vector<TruncatedSet> stack;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    // Strip comments and whitespace.
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::stringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    auto parse_indices = [&](const std::string& s) {
      std::vector<long long> out;
      std::stringstream is(s);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        try {
          out.push_back(std::stoll(tok));
        } catch (const std::logic_error&) {
          throw Error("malformed index token '" + tok + "' at line " +
                      std::to_string(lineno));
        }
      }
      return out;
    };
    if (op == "ideal") {
      int m;
      if (!(ls >> m)) throw Error("ideal directive needs a modulus degree");
      stack.push_back(TruncatedSet::ideal(F, m, D));
    } else if (op == "coset") {
      int m;
      std::string rs;
      if (!(ls >> m >> rs)) throw Error("coset directive needs m and residues");
      CosetStructure c;
      c.m = m;
      for (long long r : parse_indices(rs))
        c.residues.push_back(poly_from_index(r, F, m));
      stack.push_back(c.realize(F, D));
    } else if (op == "explicit") {
      std::string is;
      if (!(ls >> is)) throw Error("explicit directive needs indices");
      TruncatedSet s(F, D);
      for (long long i : parse_indices(is)) {
        if (i < 0 || i >= s.size())
          throw Error("explicit index " + std::to_string(i) + " out of universe");
        s.set(i);
      }
      stack.push_back(std::move(s));
    } else if (op == "pullback-even") {
      stack.push_back(deg_pullback(NatSet::evens(D), F, D));
    } else if (op == "union") {
      if (stack.size() < 2) throw Error("union needs two sets on the stack");
      TruncatedSet b = std::move(stack.back()); stack.pop_back();
      TruncatedSet a = std::move(stack.back()); stack.pop_back();
      stack.push_back(a.united(b));
    } else if (op == "complement") {
      if (stack.empty()) throw Error("complement needs a set on the stack");
      TruncatedSet a = std::move(stack.back()); stack.pop_back();
      stack.push_back(a.complemented());
    } else {
      throw Error("unknown set directive '" + op + "' at line " +
                  std::to_string(lineno));
    }
  }
  if (stack.size() != 1)
    throw Error("set program must leave exactly one set on the stack");
  return stack.back();
}

}  // namespace fqx
