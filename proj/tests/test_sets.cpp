#include <algorithm>
#include <random>

#include "doctest.h"
#include "fqx/sets.hpp"

using namespace fqx;

namespace {

Poly P(std::initializer_list<int> c) { return Poly::from_coeffs(c); }

}  // namespace

TEST_CASE("fs_set examples") {
  const Field F = make_field(2);

  SUBCASE("additive, gens {1, X}") {
    const FsResult r = fs_set({P({1}), P({0, 1})}, SemigroupOp::Additive, F, 3);
    CHECK(r.set.members() == std::vector<long long>{1, 2, 3});  // 1, X, X+1
    CHECK(r.overflow == 0);
  }
  SUBCASE("additive with repeats: 1 + 1 = 0") {
    const FsResult r = fs_set({P({1}), P({1})}, SemigroupOp::Additive, F, 3);
    CHECK(r.set.members() == std::vector<long long>{0, 1});
  }
  SUBCASE("multiplicative, gens {X, X+1}") {
    const FsResult r = fs_set({P({0, 1}), P({1, 1})}, SemigroupOp::Multiplicative, F, 4);
    // X, X+1, X^2+X
    CHECK(r.set.members() == std::vector<long long>{2, 3, 6});
  }
  SUBCASE("zero generator rejected in multiplicative mode") {
    CHECK_THROWS_AS(fs_set({Poly::zero()}, SemigroupOp::Multiplicative, F, 3), Error);
  }
  SUBCASE("overflow counted, not dropped silently") {
    const FsResult r = fs_set({P({0, 1}), P({0, 0, 1})}, SemigroupOp::Multiplicative, F, 3);
    CHECK(r.set.count() + r.overflow == 3);
    CHECK(r.overflow == 1);  // the product X^3 leaves the truncation
  }
}

TEST_CASE("fs_set monotone under generator extension") {
  const Field F = make_field(3);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly> gens;
    for (int i = 0; i < 4; ++i) {
      std::vector<int> c(1 + rng() % 3);
      for (int& x : c) x = int(rng() % 3);
      gens.push_back(Poly::from_coeffs(std::move(c)));
    }
    std::vector<Poly> sub(gens.begin(), gens.begin() + 2);
    const int D = 8;
    const FsResult big = fs_set(gens, SemigroupOp::Additive, F, D);
    const FsResult small = fs_set(sub, SemigroupOp::Additive, F, D);
    CHECK(small.set.subset_of(big.set));
  }
}

TEST_CASE("delta_set examples") {
  const Field F2 = make_field(2);
  CHECK(delta_set({P({0, 1}), P({0, 0, 1})}, F2, 4).members() ==
        std::vector<long long>{6});  // X^2+X
  const Field F3 = make_field(3);
  CHECK(delta_set({P({0}), P({1}), P({2})}, F3, 2).members() ==
        std::vector<long long>{1, 2});
  CHECK(delta_set({P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1})}, F2, 4).members() ==
        std::vector<long long>{6, 10, 12});  // X^2+X, X^3+X, X^3+X^2
  CHECK_THROWS_AS(delta_set({P({1}), P({1})}, F2, 2), Error);
}

TEST_CASE("is_syndetic examples") {
  const Field F = make_field(2);
  SUBCASE("ideal of zero-constant-term polynomials") {
    const TruncatedSet A = TruncatedSet::ideal(F, 1, 4);
    const auto T = is_syndetic(A, 1, F);
    REQUIRE(T.has_value());
    std::vector<Poly> sorted = *T;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Poly>{Poly::zero(), P({1})});
  }
  SUBCASE("full universe needs one translate") {
    const auto T = is_syndetic(TruncatedSet::full(F, 4), 1, F);
    REQUIRE(T.has_value());
    CHECK(*T == std::vector<Poly>{Poly::zero()});
  }
  SUBCASE("top-degree slice is not syndetic by constants") {
    TruncatedSet A(F, 4);
    for (long long i = 0; i < A.size(); ++i)
      if (poly_from_index(i, F, 4).degree() == 3) A.set(i);
    CHECK(!is_syndetic(A, 1, F).has_value());
  }
}

TEST_CASE("is_thick examples") {
  const Field F = make_field(2);
  CHECK(is_thick(TruncatedSet::full(F, 4), 1, F).thick);
  SUBCASE("ideal is not thick at e = 1") {
    const ThickResult r = is_thick(TruncatedSet::ideal(F, 1, 4), 1, F);
    CHECK(!r.thick);
    CHECK(r.failing_config.size() == 2);  // the block {0, 1}
  }
  SUBCASE("complement of a point is thick for small blocks") {
    TruncatedSet A = TruncatedSet::full(F, 4);
    A.set(5, false);
    const ThickResult r = is_thick(A, 1, F);
    CHECK(r.thick);
    REQUIRE(r.witness.has_value());
  }
}

TEST_CASE("ipstar_proxy examples") {
  const Field F = make_field(2);
  const int D = 6;
  SUBCASE("ideal plus noise is found with zero exceptions") {
    TruncatedSet A = TruncatedSet::ideal(F, 2, D);
    A.set(3);  // X+1
    const auto c = ipstar_proxy(A, 0, F);
    REQUIRE(c.has_value());
    CHECK(c->m == 2);
    CHECK(c->exceptions_removed.empty());
  }
  SUBCASE("zero-free coset fails at budget zero") {
    CosetStructure cs;
    cs.m = 1;
    cs.residues = {P({1})};
    const TruncatedSet A = cs.realize(F, D);
    CHECK(!ipstar_proxy(A, 0, F).has_value());
    // A generous budget buys the trivial top ideal; the verdict is about
    // the zero-budget default.
    const auto c = ipstar_proxy(A, 2, F);
    REQUIRE(c.has_value());
    CHECK(c->m == 5);
  }
  SUBCASE("whole ring minus origin needs one exception") {
    TruncatedSet A = TruncatedSet::full(F, D);
    A.set(0, false);
    CHECK(!ipstar_proxy(A, 0, F).has_value());
    const auto c = ipstar_proxy(A, 1, F);
    REQUIRE(c.has_value());
    CHECK(c->m == 0);
    CHECK(c->exceptions_removed == std::vector<Poly>{Poly::zero()});
  }
  SUBCASE("verdict stable once the exception budget is reached") {
    TruncatedSet A = TruncatedSet::ideal(F, 1, D);
    A.set(0, false);
    const auto c1 = ipstar_proxy(A, 1, F);
    const auto c9 = ipstar_proxy(A, 9, F);
    REQUIRE((c1 && c9));
    CHECK(c1->m == c9->m);
  }
}

TEST_CASE("ip_obstruction examples") {
  const Field F2 = make_field(2);
  SUBCASE("coset 1 + (X) over F_2") {
    CosetStructure A;
    A.m = 1;
    A.residues = {P({1})};
    const Obstruction o =
        ip_obstruction(A, {P({1}), P({1, 1}), P({1, 0, 1})}, F2);
    CHECK(o.indices == std::vector<int>{1, 2});
    CHECK(o.sum == P({0, 1}));  // 1 + (X+1) = X, outside A
    CHECK(!A.contains(o.sum, F2));
  }
  SUBCASE("three equal residues over F_3") {
    const Field F3 = make_field(3);
    CosetStructure A;
    A.m = 1;
    A.residues = {P({1}), P({2})};
    const Obstruction o = ip_obstruction(
        A, {P({1}), P({1, 1}), P({2, 2}), P({1, 0, 1}), P({2, 1, 1})}, F3);
    CHECK((int)o.indices.size() == 3);
    CHECK(truncate_below(o.sum, 1).is_zero());
    CHECK(!A.contains(o.sum, F3));
  }
  SUBCASE("p = 2 always extracts a pair") {
    CosetStructure A;
    A.m = 2;
    A.residues = {P({1})};
    const Obstruction o =
        ip_obstruction(A, {P({1}), P({1, 0, 1}), P({1, 0, 0, 1})}, F2);
    CHECK((int)o.indices.size() == 2);
  }
  SUBCASE("error paths") {
    CosetStructure A;
    A.m = 1;
    A.residues = {P({1})};
    CHECK_THROWS_AS(ip_obstruction(A, {P({1})}, F2), Error);                 // too short
    CHECK_THROWS_AS(ip_obstruction(A, {P({1}), P({0, 1}), P({1, 1})}, F2),  // leaves A
                    Error);
  }
}

TEST_CASE("is_ip_truncated examples") {
  const Field F = make_field(2);
  SUBCASE("ideal succeeds at depth 3") {
    const IpSearchResult r = is_ip_truncated(TruncatedSet::ideal(F, 1, 6), 3, F);
    REQUIRE(r.found);
    CHECK(r.generators.size() == 3);
    // Certificate verifies: all subset sums have zero constant term.
    for (int mask = 1; mask < 8; ++mask) {
      Poly s = Poly::zero();
      for (int i = 0; i < 3; ++i)
        if (mask & (1 << i)) s = add(s, r.generators[i], F);
      CHECK(s.coeff(0) == 0);
    }
  }
  SUBCASE("zero-free coset fails exhaustively at depth 2") {
    CosetStructure cs;
    cs.m = 1;
    cs.residues = {P({1})};
    CHECK(!is_ip_truncated(cs.realize(F, 5), 2, F).found);
  }
  SUBCASE("full universe finds the first canonical tuple") {
    const IpSearchResult r = is_ip_truncated(TruncatedSet::full(F, 4), 2, F);
    REQUIRE(r.found);
    CHECK(r.generators == std::vector<Poly>{P({1}), P({0, 1})});
  }
}

TEST_CASE("ramsey_refine examples") {
  const Field F = make_field(2);
  SUBCASE("all differences inside the ideal") {
    const TruncatedSet S = TruncatedSet::ideal(F, 1, 5);
    const std::vector<Poly> seq = {P({0, 1}), P({0, 0, 1}), P({0, 0, 0, 1}),
                                   P({0, 0, 0, 0, 1})};
    const RamseyResult r = ramsey_refine(seq, S, 4, F);
    CHECK(r.color == "in");
    CHECK(r.subsequence == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("target 1 is a singleton") {
    const TruncatedSet S = TruncatedSet::ideal(F, 1, 4);
    const RamseyResult r = ramsey_refine({P({1}), P({0, 1})}, S, 1, F);
    CHECK((int)r.subsequence.size() >= 1);
  }
  SUBCASE("verified monochromatic subsequence among first 18 polynomials") {
    const int D = 5;
    const TruncatedSet S = deg_pullback(NatSet::evens(D), F, D);
    std::vector<Poly> seq;
    for (long long i = 0; i < 18; ++i) seq.push_back(poly_from_index(i, F, D));
    const RamseyResult r = ramsey_refine(seq, S, 4, F);
    REQUIRE((int)r.subsequence.size() >= 4);
    for (size_t b = 1; b < r.subsequence.size(); ++b)
      for (size_t a = 0; a < b; ++a) {
        const Poly d = sub(seq[r.subsequence[b]], seq[r.subsequence[a]], F);
        CHECK(S.test(canonical_index(d, F, D)) == (r.color == "in"));
      }
  }
  SUBCASE("unachievable target reports the best length") {
    const TruncatedSet S = TruncatedSet::ideal(F, 1, 4);
    CHECK_THROWS_AS(ramsey_refine({P({1}), P({0, 1})}, S, 3, F), Error);
  }
}

TEST_CASE("deg_pullback examples") {
  const Field F = make_field(2);
  CHECK(deg_pullback(NatSet::from_list({0}, 4), F, 4).members() ==
        std::vector<long long>{1});
  SUBCASE("all degrees gives the punctured universe") {
    const TruncatedSet s =
        deg_pullback(NatSet::from_list({0, 1, 2, 3}, 4), F, 4);
    CHECK(s.count() == 15);
    CHECK(!s.test(0));
  }
  SUBCASE("even degrees, q = 2, D = 4") {
    const TruncatedSet s = deg_pullback(NatSet::evens(4), F, 4);
    CHECK(s.count() == 5);  // {1} plus the 4 polynomials of degree 2
  }
}

TEST_CASE("deg pullback respects finite products of monomials") {
  const Field F = make_field(2);
  const int D = 8;
  const NatSet C = NatSet::finite_sums({1, 2, 4}, D);
  const TruncatedSet pre = deg_pullback(C, F, D);
  const FsResult fp = fs_set({Poly::monomial(1), Poly::monomial(2), Poly::monomial(4)},
                             SemigroupOp::Multiplicative, F, D);
  CHECK(fp.overflow == 0);
  CHECK(fp.set.subset_of(pre));
}

TEST_CASE("coset families: depth-k IP iff zero residue, proxy agrees") {
  const Field F = make_field(2);
  const int D = 6;
  for (int m = 1; m <= 2; ++m) {
    const long long nres = 1ll << m;
    for (long long mask = 1; mask < (1ll << nres); ++mask) {
      CosetStructure cs;
      cs.m = m;
      for (long long r = 0; r < nres; ++r)
        if (mask & (1ll << r)) cs.residues.push_back(poly_from_index(r, F, m));
      const TruncatedSet A = cs.realize(F, D);
      const bool has_zero = cs.has_zero_residue();
      CHECK(is_ip_truncated(A, 3, F).found == has_zero);
      CHECK(ipstar_proxy(A, 0, F).has_value() == has_zero);
      // Every coset union is syndetic, with a cover inside deg < m.
      const auto cover = is_syndetic(A, m, F);
      REQUIRE(cover.has_value());
      CHECK((long long)cover->size() <= nres);
    }
  }
}

TEST_CASE("central_necessary proxy") {
  const Field F = make_field(2);
  // A syndetic coset union is piecewise syndetic.
  CHECK(central_necessary(TruncatedSet::ideal(F, 1, 5), 1, 1, F).piecewise_syndetic);
  // The empty set is not.
  CHECK(!central_necessary(TruncatedSet(F, 5), 2, 1, F).piecewise_syndetic);
}

TEST_CASE("set program parser") {
  const Field F = make_field(2);
  const TruncatedSet a = parse_set_program("ideal 2", F, 5);
  CHECK(a.count() == 8);
  const TruncatedSet b = parse_set_program("ideal 2\ncomplement", F, 5);
  CHECK(b.count() == 24);
  const TruncatedSet c = parse_set_program("coset 1 1\nexplicit 0,2\nunion", F, 4);
  CHECK(c.test(0));
  CHECK(c.test(1));
  CHECK(c.test(2));
  CHECK_THROWS_AS(parse_set_program("bogus 1", F, 4), Error);
  CHECK_THROWS_AS(parse_set_program("ideal 1\nideal 2", F, 4), Error);
  CHECK_THROWS_AS(parse_set_program("explicit 99", F, 2), Error);
}
