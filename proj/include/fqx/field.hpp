#pragma once

#include <string>
#include <vector>

#include "fqx/error.hpp"

namespace fqx {

// Description of the coefficient field F_q, q = p^e. Elements are encoded
// as integers in [0, q): the base-p digits of the rep are the coordinates
// of the element in the power basis 1, t, ..., t^(e-1) of F_p[t]/(modulus).
struct FieldSpec {
  int p = 2;                    // prime characteristic
  int e = 1;                    // extension degree
  std::vector<int> modulus;     // degree-e irreducible over F_p; empty when e == 1
  long long q = 2;              // p^e, derived

  bool operator==(const FieldSpec& o) const {
    return p == o.p && e == o.e && modulus == o.modulus;
  }
};

// Validated field with precomputed arithmetic tables. Supported sizes are
// small (p <= 13, e <= 2) so exhaustive oracles stay feasible.
class Field {
public:
  static constexpr int kMaxP = 13;
  static constexpr int kMaxE = 2;

  explicit Field(int p) : Field(p, 1, {}) {}
  Field(int p, int e, std::vector<int> modulus);

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int e() const { return spec_.e; }
  long long q() const { return spec_.q; }

  int add(int a, int b) const { return add_[a * spec_.q + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * spec_.q + b]; }
  int inv(int a) const;

private:
  FieldSpec spec_;
  std::vector<int> add_, mul_, neg_, inv_;
};

// Builds a Field from a partially-specified FieldSpec (q derived, default
// modulus table consulted for e == 2 when none is given).
Field make_field(int p, int e = 1, std::vector<int> modulus = {});

}  // namespace fqx
