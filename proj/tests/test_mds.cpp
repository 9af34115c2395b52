#include <algorithm>

#include "doctest.h"
#include "fqx/mds.hpp"

using namespace fqx;

namespace {

Poly P(std::initializer_list<int> c) { return Poly::from_coeffs(c); }

const Rat kHalf(1, 2), kQuarter(1, 4);

}  // namespace

TEST_CASE("translation system over F_2 mod X^2") {
  const Field F = make_field(2);
  const FiniteMDS sys = build_translation(F, 2);
  CHECK(sys.n_states == 4);
  CHECK(sys.weights[0] == kQuarter);
  // T_X is the pair of 2-cycles 0<->2, 1<->3 (indices are residues of
  // 0, 1, X, X+1).
  CHECK(sys.apply(P({0, 1}), 0, F) == 2);
  CHECK(sys.apply(P({0, 1}), 2, F) == 0);
  CHECK(sys.apply(P({0, 1}), 1, F) == 3);
  CHECK(sys.apply(P({0, 1}), 3, F) == 1);
  // Action is defined beyond the modulus degree; X^2 acts trivially.
  CHECK(sys.apply(P({0, 0, 1}), 1, F) == 1);
  CHECK(sys.apply_inv(P({1}), sys.apply(P({1}), 2, F), F) == 2);
  verify_measure_preserving(sys, 3, F);
}

TEST_CASE("bernoulli system basics") {
  const Field F = make_field(2);
  const FiniteMDS sys = build_bernoulli(F, 2, 2);
  CHECK(sys.n_states == 16);
  CHECK(sys.weights[7] == Rat(1, 16));
  CHECK(sys.perm_defined(P({1, 1})));
  CHECK(!sys.perm_defined(P({0, 0, 1})));
  verify_measure_preserving(sys, 3, F);

  CHECK_THROWS_AS(build_bernoulli(F, 1, 2), Error);
  CHECK_THROWS_AS(build_bernoulli(F, 2, 2, kDefaultStateCap, {kHalf, kQuarter}),
                  Error);
  // Biased weights are accepted and give product-measure state weights.
  const FiniteMDS biased =
      build_bernoulli(F, 2, 1, kDefaultStateCap, {Rat(1, 3), Rat(2, 3)});
  CHECK(biased.weights[0] == Rat(1, 9));
  CHECK(biased.weights[3] == Rat(4, 9));
}

TEST_CASE("pullback system basics") {
  const Field F = make_field(2);
  const FiniteMDS sys =
      build_pullback(F, {1, 2, 3, 0}, std::vector<Rat>(4, kQuarter));
  // T_f = base^(deg f); X^2+1 has degree 2.
  CHECK(sys.apply(P({1, 0, 1}), 0, F) == 2);
  CHECK(sys.apply(P({1}), 0, F) == 0);  // degree 0: identity
  CHECK(sys.apply_inv(P({0, 1}), 0, F) == 3);
  CHECK(!sys.perm_defined(Poly::zero()));
  CHECK_THROWS_AS(sys.apply(Poly::zero(), 0, F), Error);
  verify_measure_preserving(sys, 4, F);

  CHECK_THROWS_AS(build_pullback(F, {1, 1}, {kHalf, kHalf}), Error);
  CHECK_THROWS_AS(build_pullback(F, {1, 0}, {Rat(1, 3), Rat(2, 3)}), Error);
  CHECK_THROWS_AS(build_pullback(F, {1, 0}, {kHalf, kQuarter}), Error);
}

TEST_CASE("verify_measure_preserving rejects tampered weights") {
  const Field F = make_field(2);
  FiniteMDS sys = build_pullback(F, {1, 0}, {kHalf, kHalf});
  sys.weights = {Rat(1, 3), Rat(2, 3)};
  CHECK_THROWS_AS(verify_measure_preserving(sys, 3, F), Error);
}

TEST_CASE("correlation on the translation system") {
  const Field F = make_field(2);
  const FiniteMDS sys = build_translation(F, 2);
  const EventSet A = EventSet::from_indices(sys, {0});
  // mu(A cap T_f A) is 1/4 when f = 0 mod X^2 and 0 otherwise.
  CHECK(correlation(sys, A, A, Poly::zero(), F) == kQuarter);
  CHECK(correlation(sys, A, A, P({0, 0, 1}), F) == kQuarter);
  CHECK(correlation(sys, A, A, P({1}), F) == Rat(0));
  CHECK(correlation(sys, A, A, P({0, 1}), F) == Rat(0));
  CHECK_THROWS_AS(EventSet::from_indices(sys, {4}), Error);
}

TEST_CASE("correlation on the bernoulli system") {
  const Field F = make_field(2);
  const FiniteMDS sys = build_bernoulli(F, 2, 2);
  Cylinder c0;
  c0.constraints = {{Poly::zero(), 0}};
  const EventSet A = cylinder_to_event(sys, c0, F);
  CHECK(A.measure(sys) == kHalf);
  // At f = 0 the events coincide; at any other shift they are independent.
  CHECK(correlation(sys, A, A, Poly::zero(), F) == kHalf);
  CHECK(correlation(sys, A, A, P({0, 1}), F) == kQuarter);
  // Beyond the window the product law is exact.
  CHECK(correlation(sys, A, A, P({0, 0, 1}), F) == kQuarter);
}

TEST_CASE("cylinder calculus") {
  const Field F = make_field(2);
  const std::vector<Rat> w{kHalf, kHalf};
  Cylinder a, b, conflict;
  a.constraints = {{Poly::zero(), 0}};
  b.constraints = {{P({0, 1}), 1}};
  conflict.constraints = {{Poly::zero(), 0}, {Poly::zero(), 1}};
  CHECK(cylinder_measure(a, w) == kHalf);
  Cylinder ab = a;
  ab.constraints.push_back(b.constraints[0]);
  CHECK(cylinder_measure(ab, w) == kQuarter);
  CHECK(cylinder_measure(conflict, w) == Rat(0));
  Cylinder dup = a;
  dup.constraints.push_back(a.constraints[0]);
  CHECK(cylinder_measure(dup, w) == kHalf);
  CHECK_THROWS_AS(cylinder_measure(Cylinder{{{Poly::zero(), 2}}}, w), Error);

  // The calculus agrees with the explicit state enumeration everywhere the
  // latter is defined, and with the product law beyond the window.
  const FiniteMDS sys = build_bernoulli(F, 2, 2);
  const EventSet ea = cylinder_to_event(sys, a, F);
  const EventSet eb = cylinder_to_event(sys, b, F);
  for (long long i = 0; i < 8; ++i) {
    const Poly f = poly_from_index(i, F, 3);
    CHECK(cylinder_correlation(a, b, f, w, F) == correlation(sys, ea, eb, f, F));
  }
}

TEST_CASE("correlation_set excludes f = 0 on pullback systems") {
  const Field F = make_field(2);
  const FiniteMDS sys = build_pullback(F, {1, 0}, {kHalf, kHalf});
  const EventSet A = EventSet::from_indices(sys, {0});
  const CorrelationReport rep = correlation_set(sys, A, A, Rat(1, 10), 3, F);
  CHECK(rep.excluded == 1);
  CHECK(!rep.values[0].has_value());
  // Even-degree f act as the identity: correlation 1/2; odd degree: 0.
  CHECK(*rep.values[1] == kHalf);   // f = 1
  CHECK(*rep.values[2] == Rat(0));  // f = X
  CHECK(*rep.values[4] == kHalf);   // f = X^2
  CHECK(rep.product == kQuarter);
  CHECK_THROWS_AS(correlation_set(sys, A, A, Rat(0), 3, F), Error);
}

TEST_CASE("classify_mixing on the non-mixing translation system") {
  const Field F = make_field(2);
  const FiniteMDS sys = build_translation(F, 2);
  const EventSet A = EventSet::from_indices(sys, {0});
  const MixingReport rep = classify_mixing(sys, A, A, Rat(1, 10), 3, F);
  // Bad set is the ideal <X^2> = {0, X^2}; the correlation there is 1/4
  // against a product of 1/16.
  CHECK(rep.complement == std::vector<long long>{0, 4});
  CHECK(!rep.cofinite);  // X^2 lies outside the degree-1 band
  CHECK(!rep.ipstar.has_value());
  REQUIRE(rep.syndetic_cover.has_value());
  CHECK(rep.central.piecewise_syndetic);
}

TEST_CASE("classify_mixing on the bernoulli system") {
  const Field F = make_field(2);
  const FiniteMDS sys = build_bernoulli(F, 2, 2);
  Cylinder c0;
  c0.constraints = {{Poly::zero(), 0}};
  const EventSet A = cylinder_to_event(sys, c0, F);
  ClassifyParams params;
  params.ipstar_exceptions = 1;
  const MixingReport rep = classify_mixing(sys, A, A, Rat(1, 8), 3, F, params);
  // Only f = 0 correlates above the band: mu(A) = 1/2 vs product 1/4.
  CHECK(rep.complement == std::vector<long long>{0});
  CHECK(rep.cofinite);
  REQUIRE(rep.ipstar.has_value());
  CHECK(rep.ipstar->m == 0);
  CHECK(rep.ipstar->exceptions_removed == std::vector<Poly>{Poly::zero()});
  REQUIRE(rep.syndetic_cover.has_value());
  CHECK(rep.central.piecewise_syndetic);
}

TEST_CASE("khintchine_additive on the translation system") {
  const Field F = make_field(2);
  const FiniteMDS sys = build_translation(F, 2);
  const EventSet A = EventSet::from_indices(sys, {0, 2});  // residues 0 and X
  const KhintchineReport rep =
      khintchine_additive(sys, A, {Poly::zero(), P({1})}, Rat(1, 8), 3, F);
  CHECK(rep.threshold == Rat(1, 8));  // (1/2)^2 - 1/8
  // mu(A cap T_f A) saturates at 1/2 exactly when f = 0 or X mod X^2.
  CHECK(*rep.values[0] == kHalf);
  CHECK(*rep.values[2] == kHalf);
  CHECK(*rep.values[1] == Rat(0));
  CHECK(*rep.values[6] == kHalf);  // X^2 + X
  CHECK(rep.set.members() == std::vector<long long>{0, 2, 4, 6});
  CHECK(rep.overflow == 0);
  REQUIRE(rep.syndetic_cover.has_value());

  // A top-degree coefficient pushes most images out of the truncation.
  const KhintchineReport ov =
      khintchine_additive(sys, A, {Poly::monomial(2)}, Rat(1, 8), 3, F);
  CHECK(ov.overflow == 6);  // every f of degree >= 1

  CHECK_THROWS_AS(khintchine_additive(sys, A, {}, Rat(1, 8), 3, F), Error);
}

TEST_CASE("khintchine_multiplicative on a pullback system") {
  const Field F = make_field(2);
  const FiniteMDS sys = build_pullback(F, {1, 0}, {kHalf, kHalf});
  const EventSet A = EventSet::from_indices(sys, {0});
  const KhintchineReport rep =
      khintchine_multiplicative(sys, A, 1, Rat(1, 8), 5, F);
  CHECK(rep.threshold == Rat(1, 8));  // (1/2)^2 - 1/8
  // Even-degree f keep mu(A cap T_f A) = 1/2; odd degree drop it to 0.
  const TruncatedSet evens = deg_pullback(NatSet::evens(5), F, 5);
  for (long long i = 1; i < 32; ++i)
    CHECK(rep.set.test(i) == evens.test(i));
  CHECK(!rep.set.test(0));  // f = 0 is outside the acting semigroup
  REQUIRE(rep.syndetic_cover.has_value());

  // Depth 2 over a small universe: degree >= 3 overflows since 2 deg f >= D.
  const KhintchineReport deep =
      khintchine_multiplicative(sys, A, 2, Rat(1, 10), 5, F);
  CHECK(deep.overflow == 24);

  CHECK_THROWS_AS(khintchine_multiplicative(sys, A, 0, Rat(1, 8), 5, F), Error);
  const FiniteMDS trans = build_translation(F, 2);
  CHECK_THROWS_AS(
      khintchine_multiplicative(trans, A, 1, Rat(1, 8), 3, F), Error);
  CHECK_THROWS_AS(khintchine_additive(sys, A, {P({1})}, Rat(1, 8), 3, F), Error);
}

TEST_CASE("system config JSON") {
  const SystemConfig cfg = parse_system_json(
      R"({"kind":"translation","p":2,"D":3,"m":2})");
  CHECK(cfg.kind == SystemKind::Translation);
  CHECK(cfg.m == 2);
  const Field F = make_field(cfg.p, cfg.e, cfg.modulus);
  CHECK(build_system(cfg, F).n_states == 4);

  const SystemConfig pb = parse_system_json(
      R"({"kind":"pullback","p":2,"D":4,"base_perm":[1,2,3,0]})");
  CHECK(build_system(pb, make_field(2)).n_states == 4);

  CHECK_THROWS_AS(parse_system_json("{nope"), Error);
  CHECK_THROWS_AS(parse_system_json(R"({"kind":"weird"})"), Error);
}
