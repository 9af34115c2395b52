#include "fqx/ideal.hpp"

#include <algorithm>
#include <set>

namespace fqx {

IdealGens IdealGens::make(int nvars, std::vector<std::pair<int, Poly>> gens) {
  if (gens.empty()) throw Error("ideal needs at least one generator");
  std::set<int> vars;
  int constants = 0;
  for (const auto& [v, f] : gens) {
    if (v < 0 || v >= nvars) throw Error("generator variable index out of range");
    if (!vars.insert(v).second) throw Error("duplicate generator variable");
    if (f.is_zero()) throw Error("zero generator");
    if (*f.degree() == 0) ++constants;
  }
  if (constants > 1) throw Error("at most one constant generator allowed");
  return IdealGens{nvars, std::move(gens)};
}

long long IdealGens::remainder_space(const Field& F, long long cap) const {
  long long exp = 1;
  for (const auto& [v, f] : gens) {
    exp *= *f.degree();
    if (exp == 0) return 1;  // a unit generator collapses every remainder to 0
    if (exp > 62) return cap;
  }
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    r *= F.q();
    if (r > cap) return cap;
  }
  return r;
}

Reduction reduce(const MultiPoly& g, const IdealGens& gens, const Field& F) {
  for (const auto& [v, f] : gens.gens)
    if (f.is_zero()) throw Error("zero generator");
  for (const auto& [e, c] : g.terms)
    for (int v = 0; v < g.nvars; ++v)
      if (e[v] > 0) {
        bool covered = false;
        for (const auto& [gv, f] : gens.gens) covered |= (gv == v);
        if (!covered)
          throw Error("input uses variable X" + std::to_string(v + 1) +
                      " not covered by the generators");
      }

  // Sort generators by ascending variable index for a deterministic pass.
  auto order = gens.gens;
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Reduction red;
  red.quotients.assign(gens.gens.size(), MultiPoly::zero(g.nvars));
  red.remainder = g;

  for (const auto& [var, f] : order) {
    const int df = *f.degree();
    const int lead_inv = F.inv(f.coeffs[df]);
    const MultiPoly fm = MultiPoly::from_univariate(f, var, g.nvars);
    // Quotient index in the original generator order.
    size_t qi = 0;
    while (gens.gens[qi].first != var) ++qi;
    // Divide out X_var as long as some term has exponent >= deg f. Each
    // step strictly lowers the highest offending term, so this terminates.
    for (;;) {
      auto it = std::find_if(red.remainder.terms.rbegin(), red.remainder.terms.rend(),
                             [&](const auto& t) { return t.first[var] >= df; });
      if (it == red.remainder.terms.rend()) break;
      std::vector<int> qe = it->first;
      qe[var] -= df;
      const int qc = F.mul(it->second, lead_inv);
      MultiPoly t{g.nvars, {{qe, qc}}};
      red.quotients[qi] = add(red.quotients[qi], t, F);
      red.remainder = sub(red.remainder, mul(t, fm, F), F);
    }
  }
  return red;
}

bool ideal_member(const MultiPoly& g, const IdealGens& gens, const Field& F) {
  return reduce(g, gens, F).remainder.is_zero();
}

Witness ip_witness(const MultiPolyStream& seq, const IdealGens& gens,
                   const Field& F, int scan_cap) {
  const long long bound = (F.p() - 1) * gens.remainder_space(F) + 1;
  if (scan_cap < bound && bound <= (1ll << 22))
    throw Error("scan_cap " + std::to_string(scan_cap) +
                " below pigeonhole bound " + std::to_string(bound));

  std::set<MultiPoly> seen;
  std::map<MultiPoly, std::vector<std::pair<int, MultiPoly>>> buckets;
  int scanned = 0;
  for (int n = 1; scanned < scan_cap; ++n) {
    auto g = seq();
    if (!g) break;
    if (!seen.insert(*g).second)
      throw Error("sequence is not injective: duplicate at position " +
                  std::to_string(n));
    ++scanned;
    MultiPoly r = reduce(*g, gens, F).remainder;
    if (r.is_zero()) return Witness{{n}, *g, Witness::Card::Singleton};
    auto& bucket = buckets[std::move(r)];
    bucket.emplace_back(n, std::move(*g));
    if (int(bucket.size()) == F.p()) {
      Witness w;
      w.card = Witness::Card::PFold;
      w.sum = MultiPoly::zero(bucket.front().second.nvars);
      for (const auto& [idx, gp] : bucket) {
        w.indices.push_back(idx);
        w.sum = add(w.sum, gp, F);
      }
      if (!ideal_member(w.sum, gens, F))
        throw Error("internal: p-fold sum failed ideal membership");
      return w;
    }
  }
  std::string census = "no witness after " + std::to_string(scanned) +
                       " distinct terms; remainder census:";
  for (const auto& [r, b] : buckets)
    census += " [" + multipoly_to_string(r) + "]x" + std::to_string(b.size());
  throw Error(census);
}

Witness ip_witness(const std::vector<MultiPoly>& seq, const IdealGens& gens,
                   const Field& F, int scan_cap) {
  size_t i = 0;
  return ip_witness(
      [&]() -> std::optional<MultiPoly> {
        if (i >= seq.size()) return std::nullopt;
        return seq[i++];
      },
      gens, F, scan_cap);
}

}  // namespace fqx
