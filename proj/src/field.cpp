#include "fqx/field.hpp"

#include <algorithm>

namespace fqx {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Digits of rep in base p, length e (little-endian).
std::vector<int> digits(long long rep, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) { d[i] = int(rep % p); rep /= p; }
  return d;
}

long long undigits(const std::vector<int>& d, int p) {
  long long rep = 0;
  for (int i = int(d.size()) - 1; i >= 0; --i) rep = rep * p + d[i];
  return rep;
}

// Evaluate a polynomial over F_p at x (mod p).
int eval_mod_p(const std::vector<int>& coeffs, int x, int p) {
  long long v = 0;
  for (int i = int(coeffs.size()) - 1; i >= 0; --i) v = (v * x + coeffs[i]) % p;
  return int(v);
}

std::vector<int> default_modulus(int p, int e) {
  if (e == 2 && p == 2) return {1, 1, 1};  // t^2 + t + 1
  if (e == 2 && p == 3) return {1, 0, 1};  // t^2 + 1
  throw Error("no default modulus for p=" + std::to_string(p) +
              ", e=" + std::to_string(e) + "; supply one explicitly");
}

}  // namespace

Field::Field(int p, int e, std::vector<int> modulus) {
  if (!is_prime(p)) throw Error("field characteristic must be prime, got " + std::to_string(p));
  if (p > kMaxP) throw Error("characteristic " + std::to_string(p) + " exceeds supported bound " + std::to_string(kMaxP));
  if (e < 1 || e > kMaxE) throw Error("extension degree " + std::to_string(e) + " out of supported range [1," + std::to_string(kMaxE) + "]");

  if (e == 1) {
    if (!modulus.empty()) throw Error("prime field takes no modulus");
  } else {
    if (modulus.empty()) modulus = default_modulus(p, e);
    if (int(modulus.size()) != e + 1 || modulus[e] % p == 0)
      throw Error("modulus must have degree exactly " + std::to_string(e));
    for (int& c : modulus) c = ((c % p) + p) % p;
    // Normalize to monic.
    if (modulus[e] != 1) {
      int lead_inv = 1;
      for (int x = 1; x < p; ++x)
        if (modulus[e] * x % p == 1) { lead_inv = x; break; }
      for (int& c : modulus) c = c * lead_inv % p;
    }
    // Irreducibility over F_p: degree 2, so a root search is exhaustive.
    for (int x = 0; x < p; ++x)
      if (eval_mod_p(modulus, x, p) == 0)
        throw Error("modulus is reducible over F_" + std::to_string(p) +
                    " (root at " + std::to_string(x) + ")");
  }

  spec_.p = p;
  spec_.e = e;
  spec_.modulus = modulus;
  spec_.q = 1;
  for (int i = 0; i < e; ++i) spec_.q *= p;
  const long long q = spec_.q;

  neg_.resize(q);
  add_.resize(q * q);
  mul_.resize(q * q);
  for (long long a = 0; a < q; ++a) {
    auto da = digits(a, p, e);
    std::vector<int> dn(e);
    for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = int(undigits(dn, p));
    for (long long b = 0; b < q; ++b) {
      auto db = digits(b, p, e);
      std::vector<int> ds(e);
      for (int i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = int(undigits(ds, p));
      // Multiply in F_p[t], then reduce by the monic modulus.
      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = int(prod.size()) - 1; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i)
          prod[d - e + i] = ((prod[d - e + i] - c * modulus[i]) % p + p) % p;
      }
      prod.resize(e);
      mul_[a * q + b] = int(undigits(prod, p));
    }
  }

  inv_.assign(q, 0);
  for (long long a = 1; a < q; ++a)
    for (long long b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) { inv_[a] = int(b); break; }
}

int Field::inv(int a) const {
  if (a == 0) throw Error("inverse of zero field element");
  return inv_[a];
}

Field make_field(int p, int e, std::vector<int> modulus) {
  return Field(p, e, std::move(modulus));
}

}  // namespace fqx
