#include "fqx/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace fqx {

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, e[var]);
  return d;
}

MultiPoly MultiPoly::constant(int nvars, int rep) {
  MultiPoly m{nvars, {}};
  if (rep != 0) m.terms[std::vector<int>(nvars, 0)] = rep;
  return m;
}

MultiPoly MultiPoly::from_univariate(const Poly& f, int var, int nvars) {
  MultiPoly m{nvars, {}};
  for (int i = 0; i < int(f.coeffs.size()); ++i) {
    if (f.coeffs[i] == 0) continue;
    std::vector<int> e(nvars, 0);
    e[var] = i;
    m.terms[std::move(e)] = f.coeffs[i];
  }
  return m;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b, const Field& F) {
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms) {
    auto it = r.terms.find(e);
    if (it == r.terms.end()) {
      r.terms[e] = c;
    } else {
      it->second = F.add(it->second, c);
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

MultiPoly sub(const MultiPoly& a, const MultiPoly& b, const Field& F) {
  MultiPoly nb{b.nvars, {}};
  for (const auto& [e, c] : b.terms) nb.terms[e] = F.neg(c);
  return add(a, nb, F);
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b, const Field& F) {
  MultiPoly r{a.nvars, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      const int c = F.mul(ca, cb);
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        if (c != 0) r.terms[std::move(e)] = c;
      } else {
        it->second = F.add(it->second, c);
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

MultiPoly term_mul(int c, const std::vector<int>& expo, const MultiPoly& a,
                   const Field& F) {
  MultiPoly r{a.nvars, {}};
  if (c == 0) return r;
  for (const auto& [e, ca] : a.terms) {
    std::vector<int> ne(a.nvars);
    for (int i = 0; i < a.nvars; ++i) ne[i] = e[i] + expo[i];
    r.terms[std::move(ne)] = F.mul(c, ca);
  }
  return r;
}

std::string multipoly_to_string(const MultiPoly& m) {
  if (m.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : m.terms) {
    if (!s.empty()) s += ';';
    s += std::to_string(c) + "@";
    for (int i = 0; i < m.nvars; ++i) {
      if (i) s += ',';
      s += std::to_string(e[i]);
    }
  }
  return s;
}

MultiPoly multipoly_parse(const std::string& s, int nvars, const Field& F) {
  MultiPoly m{nvars, {}};
  if (s == "0") return m;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, ';')) {
    auto at = term.find('@');
    if (at == std::string::npos)
      throw Error("malformed multipoly term '" + term + "' (missing @)");
    int c;
    try {
      c = std::stoi(term.substr(0, at));
    } catch (const std::logic_error&) {
      throw Error("malformed multipoly coefficient in '" + term + "'");
    }
    if (c < 0 || c >= F.q())
      throw Error("multipoly coefficient out of range in '" + term + "'");
    std::vector<int> e;
    std::stringstream es(term.substr(at + 1));
    std::string tok;
    while (std::getline(es, tok, ',')) {
      try {
        e.push_back(std::stoi(tok));
      } catch (const std::logic_error&) {
        throw Error("malformed multipoly exponent '" + tok + "'");
      }
      if (e.back() < 0) throw Error("negative multipoly exponent '" + tok + "'");
    }
    if (int(e.size()) != nvars)
      throw Error("multipoly term '" + term + "' has " + std::to_string(e.size()) +
                  " exponents, expected " + std::to_string(nvars));
    if (c != 0) {
      auto it = m.terms.find(e);
      if (it != m.terms.end()) {
        it->second = F.add(it->second, c);
        if (it->second == 0) m.terms.erase(it);
      } else {
        m.terms[std::move(e)] = c;
      }
    }
  }
  return m;
}

}  // namespace fqx
