#include "fqx/poly.hpp"

#include <sstream>

namespace fqx {

Poly Poly::monomial(int k, int rep) {
  if (rep == 0) return {};
  Poly f;
  f.coeffs.assign(k + 1, 0);
  f.coeffs[k] = rep;
  return f;
}

Poly Poly::from_coeffs(std::vector<int> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return Poly{std::move(c)};
}

Poly add(const Poly& a, const Poly& b, const Field& F) {
  std::vector<int> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(int(i)), b.coeff(int(i)));
  return Poly::from_coeffs(std::move(c));
}

Poly neg(const Poly& a, const Field& F) {
  std::vector<int> c = a.coeffs;
  for (int& x : c) x = F.neg(x);
  return Poly{std::move(c)};
}

Poly sub(const Poly& a, const Poly& b, const Field& F) {
  return add(a, neg(b, F), F);
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<int> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
  return Poly::from_coeffs(std::move(c));
}

Poly scalar_mul(int c, const Poly& a, const Field& F) {
  if (c == 0) return {};
  std::vector<int> r = a.coeffs;
  for (int& x : r) x = F.mul(c, x);
  return Poly::from_coeffs(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& g, const Poly& f, const Field& F) {
  if (f.is_zero()) throw Error("zero divisor");
  if (g.is_zero()) return {Poly::zero(), Poly::zero()};
  const int df = *f.degree();
  const int lead_inv = F.inv(f.coeffs[df]);
  std::vector<int> r = g.coeffs;
  std::vector<int> h(g.coeffs.size(), 0);
  for (int d = int(r.size()) - 1; d >= df; --d) {
    if (r[d] == 0) continue;
    const int c = F.mul(r[d], lead_inv);
    h[d - df] = c;
    for (int i = 0; i <= df; ++i)
      r[d - df + i] = F.sub(r[d - df + i], F.mul(c, f.coeffs[i]));
  }
  return {Poly::from_coeffs(std::move(h)), Poly::from_coeffs(std::move(r))};
}

Poly truncate_below(const Poly& f, int m) {
  std::vector<int> c(f.coeffs.begin(),
                     f.coeffs.begin() + std::min<size_t>(f.coeffs.size(), m));
  return Poly::from_coeffs(std::move(c));
}

long long universe_size(const Field& F, int D, long long cap) {
  if (D < 0) throw Error("degree bound must be nonnegative");
  long long n = 1;
  for (int i = 0; i < D; ++i) {
    n *= F.q();
    if (n > cap)
      throw Error("universe cap exceeded: q^D = " + std::to_string(F.q()) + "^" +
                  std::to_string(D) + " > " + std::to_string(cap));
  }
  return n;
}

long long canonical_index(const Poly& f, const Field& F, int D) {
  if (int(f.coeffs.size()) > D)
    throw Error("polynomial of degree " + std::to_string(*f.degree()) +
                " outside universe deg < " + std::to_string(D));
  long long idx = 0;
  for (int i = int(f.coeffs.size()) - 1; i >= 0; --i)
    idx = idx * F.q() + f.coeffs[i];
  return idx;
}

Poly poly_from_index(long long idx, const Field& F, int D) {
  if (idx < 0) throw Error("negative canonical index");
  std::vector<int> c(D, 0);
  for (int i = 0; i < D; ++i) { c[i] = int(idx % F.q()); idx /= F.q(); }
  if (idx != 0) throw Error("canonical index outside universe");
  return Poly::from_coeffs(std::move(c));
}

std::vector<Poly> enumerate_polys(const Field& F, int D, long long cap) {
  const long long n = universe_size(F, D, cap);
  std::vector<Poly> out;
  out.reserve(n);
  for (long long i = 0; i < n; ++i) out.push_back(poly_from_index(i, F, D));
  return out;
}

std::string poly_to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.coeffs[i]);
  }
  return s;
}

Poly poly_parse(const std::string& s, const Field& F) {
  std::vector<int> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::logic_error&) {
      throw Error("malformed polynomial literal: token '" + tok + "'");
    }
    if (pos != tok.size() || v < 0 || v >= F.q())
      throw Error("malformed polynomial literal: token '" + tok + "'");
    c.push_back(v);
  }
  if (c.empty()) throw Error("empty polynomial literal");
  return Poly::from_coeffs(std::move(c));
}

std::string poly_pretty(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int i = 0; i < int(f.coeffs.size()); ++i) {
    if (f.coeffs[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(f.coeffs[i]);
    } else {
      if (f.coeffs[i] != 1) s += std::to_string(f.coeffs[i]) + "*";
      s += (i == 1) ? "X" : "X^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace fqx
