#include "fqx/mds.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "json.hpp"

namespace fqx {
namespace {

long long ipow(long long b, int e, long long cap) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > cap)
      throw Error("state cap exceeded: " + std::to_string(b) + "^" +
                  std::to_string(e) + " > " + std::to_string(cap));
  }
  return r;
}

int state_digit(const FiniteMDS& sys, long long state, long long coord) {
  for (long long i = 0; i < coord; ++i) state /= sys.alphabet;
  return int(state % sys.alphabet);
}

}  // namespace

bool FiniteMDS::perm_defined(const Poly& f) const {
  switch (kind) {
    case SystemKind::Translation: return true;
    case SystemKind::Bernoulli: return f.is_zero() || *f.degree() < window;
    case SystemKind::Pullback: return !f.is_zero();
  }
  return false;
}

long long FiniteMDS::apply(const Poly& f, long long state, const Field& F) const {
  switch (kind) {
    case SystemKind::Translation: {
      const Poly s = poly_from_index(state, F, m);
      return canonical_index(truncate_below(add(s, f, F), m), F, m);
    }
    case SystemKind::Bernoulli: {
      if (!perm_defined(f)) throw Error("bernoulli shift leaves the window");
      // (T_f w)(g) = w(g + f); both g and g + f stay below the window degree.
      const long long coords = ipow(F.q(), window, kDefaultStateCap);
      long long out = 0, scale = 1;
      for (long long g = 0; g < coords; ++g) {
        const Poly gp = poly_from_index(g, F, window);
        const long long src = canonical_index(add(gp, f, F), F, window);
        out += (long long)state_digit(*this, state, src) * scale;
        scale *= alphabet;
      }
      return out;
    }
    case SystemKind::Pullback: {
      if (f.is_zero()) throw Error("pullback action undefined for f = 0");
      long long s = state;
      for (int i = 0; i < *f.degree(); ++i) s = base_perm[s];
      return s;
    }
  }
  throw Error("unreachable");
}

long long FiniteMDS::apply_inv(const Poly& f, long long state, const Field& F) const {
  switch (kind) {
    case SystemKind::Translation:
    case SystemKind::Bernoulli:
      return apply(neg(f, F), state, F);
    case SystemKind::Pullback: {
      if (f.is_zero()) throw Error("pullback action undefined for f = 0");
      long long s = state;
      for (int i = 0; i < *f.degree(); ++i) s = base_inv[s];
      return s;
    }
  }
  throw Error("unreachable");
}

FiniteMDS build_translation(const Field& F, int m, long long cap) {
  FiniteMDS sys;
  sys.spec = F.spec();
  sys.kind = SystemKind::Translation;
  sys.m = m;
  sys.n_states = ipow(F.q(), m, cap);
  sys.weights.assign(sys.n_states, Rat(1, sys.n_states));
  return sys;
}

FiniteMDS build_bernoulli(const Field& F, int alphabet, int window,
                          long long cap, std::vector<Rat> sym_weights) {
  if (alphabet < 2) throw Error("bernoulli alphabet must have >= 2 symbols");
  FiniteMDS sys;
  sys.spec = F.spec();
  sys.kind = SystemKind::Bernoulli;
  sys.alphabet = alphabet;
  sys.window = window;
  const long long coords = ipow(F.q(), window, cap);
  sys.n_states = ipow(alphabet, int(coords), cap);
  if (sym_weights.empty())
    sym_weights.assign(alphabet, Rat(1, alphabet));
  if (int(sym_weights.size()) != alphabet)
    throw Error("symbol weight count does not match alphabet");
  Rat total(0);
  for (const auto& w : sym_weights) total += w;
  if (total != Rat(1)) throw Error("symbol weights must sum to 1");
  sys.sym_weights = std::move(sym_weights);
  sys.weights.reserve(sys.n_states);
  for (long long s = 0; s < sys.n_states; ++s) {
    Rat w(1);
    for (long long g = 0; g < coords; ++g)
      w *= sys.sym_weights[state_digit(sys, s, g)];
    sys.weights.push_back(w);
  }
  return sys;
}

FiniteMDS build_pullback(const Field& F, std::vector<int> base_perm,
                         std::vector<Rat> base_weights) {
  const long long n = base_perm.size();
  if (n == 0 || base_weights.size() != base_perm.size())
    throw Error("pullback base permutation and weights must match and be nonempty");
  std::vector<int> inv(n, -1);
  for (long long i = 0; i < n; ++i) {
    if (base_perm[i] < 0 || base_perm[i] >= n || inv[base_perm[i]] != -1)
      throw Error("base_perm is not a permutation");
    inv[base_perm[i]] = int(i);
  }
  Rat total(0);
  for (long long i = 0; i < n; ++i) {
    total += base_weights[i];
    if (base_weights[base_perm[i]] != base_weights[i])
      throw Error("base permutation does not preserve weights");
  }
  if (total != Rat(1)) throw Error("base weights must sum to 1");
  FiniteMDS sys;
  sys.spec = F.spec();
  sys.kind = SystemKind::Pullback;
  sys.n_states = n;
  sys.weights = std::move(base_weights);
  sys.base_perm = std::move(base_perm);
  sys.base_inv = std::move(inv);
  return sys;
}

Rat EventSet::measure(const FiniteMDS& sys) const {
  Rat mu(0);
  for (long long s = 0; s < sys.n_states; ++s)
    if (members[s]) mu += sys.weights[s];
  return mu;
}

EventSet EventSet::from_indices(const FiniteMDS& sys,
                                const std::vector<long long>& idx) {
  EventSet e;
  e.members.assign(sys.n_states, 0);
  for (long long i : idx) {
    if (i < 0 || i >= sys.n_states)
      throw Error("event state index " + std::to_string(i) + " out of range");
    e.members[i] = 1;
  }
  return e;
}

EventSet EventSet::all(const FiniteMDS& sys) {
  EventSet e;
  e.members.assign(sys.n_states, 1);
  return e;
}

Rat correlation(const FiniteMDS& sys, const EventSet& A, const EventSet& B,
                const Poly& f, const Field& F) {
  if (!sys.perm_defined(f)) {
    if (sys.kind == SystemKind::Bernoulli) {
      // The shifted coordinate block is disjoint from the window, so the
      // events are independent under the product measure.
      return A.measure(sys) * B.measure(sys);
    }
    throw Error("action undefined for this f");
  }
  Rat mu(0);
  for (long long s = 0; s < sys.n_states; ++s)
    if (A.members[s] && B.members[sys.apply_inv(f, s, F)])
      mu += sys.weights[s];
  return mu;
}

Rat cylinder_measure(const Cylinder& c, const std::vector<Rat>& sym_weights) {
  std::map<Poly, int> merged;
  for (const auto& [g, a] : c.constraints) {
    if (a < 0 || a >= int(sym_weights.size()))
      throw Error("cylinder symbol out of alphabet");
    auto [it, fresh] = merged.emplace(g, a);
    if (!fresh && it->second != a) return Rat(0);
  }
  Rat mu(1);
  for (const auto& [g, a] : merged) mu *= sym_weights[a];
  return mu;
}

Rat cylinder_correlation(const Cylinder& A, const Cylinder& B, const Poly& f,
                         const std::vector<Rat>& sym_weights, const Field& F) {
  // w in T_f B iff w(h + f) = b for every constraint (h, b) of B.
  Cylinder joint = A;
  for (const auto& [h, b] : B.constraints)
    joint.constraints.emplace_back(add(h, f, F), b);
  return cylinder_measure(joint, sym_weights);
}

EventSet cylinder_to_event(const FiniteMDS& sys, const Cylinder& c,
                           const Field& F) {
  if (sys.kind != SystemKind::Bernoulli)
    throw Error("cylinder events require a bernoulli system");
  EventSet e;
  e.members.assign(sys.n_states, 0);
  for (long long s = 0; s < sys.n_states; ++s) {
    bool ok = true;
    for (const auto& [g, a] : c.constraints) {
      const long long coord = canonical_index(g, F, sys.window);
      if (state_digit(sys, s, coord) != a) { ok = false; break; }
    }
    e.members[s] = ok;
  }
  return e;
}

CorrelationReport correlation_set(const FiniteMDS& sys, const EventSet& A,
                                  const EventSet& B, const Rat& eps, int D,
                                  const Field& F) {
  if (!(eps > Rat(0))) throw Error("epsilon must be positive");
  CorrelationReport rep{{}, A.measure(sys) * B.measure(sys), eps,
                        TruncatedSet(F, D), 0};
  const long long n = universe_size(F, D);
  rep.values.resize(n);
  for (long long i = 0; i < n; ++i) {
    const Poly f = poly_from_index(i, F, D);
    if (sys.kind == SystemKind::Pullback && f.is_zero()) {
      ++rep.excluded;
      continue;
    }
    const Rat v = correlation(sys, A, B, f, F);
    rep.values[i] = v;
    if ((v - rep.product).abs() < eps) rep.good.set(i);
  }
  return rep;
}

MixingReport classify_mixing(const FiniteMDS& sys, const EventSet& A,
                             const EventSet& B, const Rat& eps, int D,
                             const Field& F, ClassifyParams params) {
  MixingReport rep{correlation_set(sys, A, B, eps, D, F)};
  const int band = params.cofinite_band >= 0 ? params.cofinite_band
                                             : std::max(0, D - 2);
  rep.cofinite_band = band;
  const long long band_size = universe_size(F, band);
  rep.cofinite = true;
  for (long long i = 0; i < rep.corr.good.size(); ++i) {
    if (rep.corr.values[i] && !rep.corr.good.test(i)) {
      rep.complement.push_back(i);
      if (i >= band_size) rep.cofinite = false;
    }
  }
  rep.ipstar = ipstar_proxy(rep.corr.good, params.ipstar_exceptions, F);
  const int m_max = params.syndetic_m_max >= 0 ? params.syndetic_m_max
                                               : std::min(D, 3);
  const int e = params.thick_e >= 0 ? params.thick_e : std::min(D - 1, 2);
  if (sys.additive()) {
    rep.syndetic_cover = is_syndetic(rep.corr.good, m_max, F);
  } else {
    rep.syndetic_cover = is_syndetic_mult(rep.corr.good, m_max, F);
  }
  rep.central = central_necessary(rep.corr.good, m_max, e, F);
  return rep;
}

namespace {

KhintchineReport khintchine_common(
    const FiniteMDS& sys, const EventSet& A, const Rat& eps, int D,
    const Field& F, int exponent, int syndetic_m_max,
    const std::function<std::optional<std::vector<Poly>>(const Poly&)>& images) {
  if (!(eps > Rat(0))) throw Error("epsilon must be positive");
  KhintchineReport rep{TruncatedSet(F, D), {}, A.measure(sys).pow(exponent) - eps,
                       0, std::nullopt};
  const long long n = universe_size(F, D);
  rep.values.resize(n);
  for (long long i = 0; i < n; ++i) {
    const Poly f = poly_from_index(i, F, D);
    if (sys.kind == SystemKind::Pullback && f.is_zero()) continue;
    auto imgs = images(f);
    if (!imgs) { ++rep.overflow; continue; }
    Rat mu(0);
    for (long long s = 0; s < sys.n_states; ++s) {
      bool in_all = A.members[s];
      for (const Poly& g : *imgs) {
        if (!in_all) break;
        in_all = A.members[sys.apply_inv(g, s, F)];
      }
      if (in_all) mu += sys.weights[s];
    }
    rep.values[i] = mu;
    if (mu > rep.threshold) rep.set.set(i);
  }
  const int m_max = syndetic_m_max >= 0 ? syndetic_m_max : std::min(D, 3);
  rep.syndetic_cover = sys.additive() ? is_syndetic(rep.set, m_max, F)
                                      : is_syndetic_mult(rep.set, m_max, F);
  return rep;
}

}  // namespace

KhintchineReport khintchine_additive(const FiniteMDS& sys, const EventSet& A,
                                     const std::vector<Poly>& coeffs,
                                     const Rat& eps, int D, const Field& F,
                                     int syndetic_m_max) {
  if (coeffs.empty()) throw Error("khintchine needs at least one coefficient");
  if (!sys.additive()) throw Error("coefficient mode requires an additive system");
  auto images = [&](const Poly& f) -> std::optional<std::vector<Poly>> {
    std::vector<Poly> imgs;
    for (const Poly& c : coeffs) {
      Poly g = mul(c, f, F);
      if (!g.is_zero() && *g.degree() >= D) return std::nullopt;
      if (!sys.perm_defined(g)) return std::nullopt;
      imgs.push_back(std::move(g));
    }
    return imgs;
  };
  return khintchine_common(sys, A, eps, D, F, int(coeffs.size()),
                           syndetic_m_max, images);
}

KhintchineReport khintchine_multiplicative(const FiniteMDS& sys,
                                           const EventSet& A, int k,
                                           const Rat& eps, int D,
                                           const Field& F,
                                           int syndetic_m_max) {
  if (sys.kind != SystemKind::Pullback)
    throw Error("powers mode requires a multiplicative-pullback system");
  if (k < 1) throw Error("power depth must be >= 1");
  auto images = [&](const Poly& f) -> std::optional<std::vector<Poly>> {
    if (f.is_zero()) throw Error("pullback action undefined for f = 0");
    if ((long long)(*f.degree()) * k >= D && *f.degree() > 0) return std::nullopt;
    std::vector<Poly> imgs;
    Poly pw = f;
    for (int j = 1; j <= k; ++j) {
      imgs.push_back(pw);
      if (j < k) pw = mul(pw, f, F);
    }
    return imgs;
  };
  return khintchine_common(sys, A, eps, D, F, k + 1, syndetic_m_max, images);
}

void verify_measure_preserving(const FiniteMDS& sys, int D, const Field& F) {
  const long long n = universe_size(F, D);
  for (long long i = 0; i < n; ++i) {
    const Poly f = poly_from_index(i, F, D);
    if (!sys.perm_defined(f)) continue;
    std::vector<char> hit(sys.n_states, 0);
    for (long long s = 0; s < sys.n_states; ++s) {
      const long long t = sys.apply(f, s, F);
      if (hit[t]) throw Error("T_f is not injective");
      hit[t] = 1;
      if (sys.weights[t] != sys.weights[s])
        throw Error("T_f does not preserve weights");
    }
  }
  if (sys.additive()) {
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j) {
        const Poly f = poly_from_index(i, F, D);
        const Poly g = poly_from_index(j, F, D);
        const Poly s = add(f, g, F);
        if (!sys.perm_defined(f) || !sys.perm_defined(g) || !sys.perm_defined(s))
          continue;
        for (long long st = 0; st < sys.n_states; ++st)
          if (sys.apply(f, sys.apply(g, st, F), F) != sys.apply(s, st, F))
            throw Error("additive action law violated");
      }
  }
}

SystemConfig parse_system_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("malformed system JSON: ") + e.what());
  }
  SystemConfig cfg;
  const std::string kind = j.value("kind", "");
  if (kind == "translation") cfg.kind = SystemKind::Translation;
  else if (kind == "bernoulli") cfg.kind = SystemKind::Bernoulli;
  else if (kind == "pullback") cfg.kind = SystemKind::Pullback;
  else throw Error("unknown system kind '" + kind + "'");
  cfg.p = j.value("p", 2);
  cfg.e = j.value("e", 1);
  if (j.contains("modulus")) cfg.modulus = j["modulus"].get<std::vector<int>>();
  cfg.D = j.value("D", 4);
  cfg.state_cap = j.value("state_cap", kDefaultStateCap);
  cfg.m = j.value("m", 0);
  cfg.alphabet = j.value("alphabet", 0);
  cfg.window = j.value("window", 0);
  if (j.contains("base_perm")) cfg.base_perm = j["base_perm"].get<std::vector<int>>();
  if (j.contains("base_weights"))
    cfg.base_weights = j["base_weights"].get<std::vector<std::string>>();
  return cfg;
}

FiniteMDS build_system(const SystemConfig& cfg, const Field& F) {
  switch (cfg.kind) {
    case SystemKind::Translation:
      return build_translation(F, cfg.m, cfg.state_cap);
    case SystemKind::Bernoulli:
      return build_bernoulli(F, cfg.alphabet, cfg.window, cfg.state_cap);
    case SystemKind::Pullback: {
      std::vector<Rat> w;
      if (cfg.base_weights.empty())
        w.assign(cfg.base_perm.size(),
                 Rat(1, (long long)cfg.base_perm.size()));
      else
        for (const auto& s : cfg.base_weights) w.push_back(Rat::parse(s));
      return build_pullback(F, cfg.base_perm, std::move(w));
    }
  }
  throw Error("unreachable");
}

}  // namespace fqx
