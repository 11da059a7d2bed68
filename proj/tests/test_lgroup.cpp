#include "spdom/lgroup.hpp"

#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "spdom/error.hpp"

using namespace spdom;

namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }
Space S(const char* text) { return parse_space(text); }
Clopen C(const char* text, const Space& s) { return parse_clopen(text, s); }
StepFunction F(const char* text, const Space& s) { return parse_step_function(text, s); }

// Representative points of every cell of the common refinement of f and g;
// two step functions are equal iff they agree on all of these.
std::vector<Point> refinement_samples(const StepFunction& f, const StepFunction& g) {
  std::vector<Point> pts;
  for (const auto& pf : f.pieces())
    for (const auto& pg : g.pieces())
      if (auto p = sample_point(clop_intersect(pf.set, pg.set))) pts.push_back(*p);
  return pts;
}

}  // namespace

TEST_CASE("step function construction and canonical form") {
  Space sw = S("ord(w)");
  StepFunction zero = StepFunction::constant(sw, 0);
  CHECK(zero.pieces().size() == 1);
  CHECK(zero.pieces()[0].set == Clopen::whole(sw));
  CHECK(zero.pieces()[0].value == 0);
  CHECK(zero.is_zero());

  StepFunction chi = StepFunction::indicator(C("[0,3]", sw));
  CHECK(chi == F("[0,3]->1,[4,w]->0", sw));
  CHECK(chi.pieces().size() == 2);

  // Same-value pieces collapse into one.
  CHECK(F("[0,3]->1,[4,5]->0,[6,w]->1", sw).pieces().size() == 2);

  CHECK_THROWS_AS(F("[0,3]->1,[2,w]->0", sw), DomainError);  // overlap
  CHECK_THROWS_AS(F("[0,3]->1", sw), DomainError);           // gap
  Space cc = S("cantor");
  CHECK_THROWS_AS(StepFunction::from_pieces(
                      sw, {StepFunction::Piece{Clopen::whole(cc), mpz_class(1)}}),
                  DomainError);  // clopen from another space
}

TEST_CASE("pointwise arithmetic and lattice operations") {
  Space sw = S("ord(w)");
  StepFunction chi = StepFunction::indicator(C("[0,3]", sw));
  CHECK(chi + chi == F("[0,3]->2,[4,w]->0", sw));
  CHECK(-chi == F("[0,3]->-1,[4,w]->0", sw));
  CHECK(chi - chi == StepFunction::constant(sw, 0));
  CHECK(mpz_class(3) * chi == F("[0,3]->3,[4,w]->0", sw));

  StepFunction two_lo = F("[0,5]->2,[6,w]->0", sw);
  StepFunction one = StepFunction::constant(sw, 1);
  StepFunction m = meet(two_lo, one);
  CHECK(m == F("[0,5]->1,[6,w]->0", sw));
  // Pointwise oracle at the named points.
  for (const char* pt : {"0", "5", "6", "w"}) {
    Point p = parse_point(pt, sw);
    mpz_class lhs = m.eval(p);
    mpz_class a = two_lo.eval(p), b = one.eval(p);
    CHECK(lhs == (cmp(a, b) <= 0 ? a : b));
  }

  Space s9 = S("ord(9)");
  StepFunction f = StepFunction::indicator(C("[0,2]", s9));
  StepFunction g = StepFunction::indicator(C("[2,4]", s9));
  CHECK(meet(f, g) + join(f, g) == f + g);
  CHECK_THROWS_AS(f + chi, DomainError);  // mismatched spaces
}

TEST_CASE("comparison and evaluation") {
  Space sw = S("ord(w)");
  CHECK(leq(StepFunction::indicator(C("[0,3]", sw)), StepFunction::constant(sw, 1)));
  CHECK((mpz_class(2) * StepFunction::indicator(C("[0,w]", sw))).eval(Point{OrdPoint{O("w")}}) == 2);
  CHECK_FALSE(leq(StepFunction::indicator(C("[0,3]", sw)),
                  mpz_class(5) * StepFunction::indicator(C("[4,7]", sw))));
  CHECK(F("[0,3]->2,[4,w]->0", sw).eval(Point{OrdPoint{O("2")}}) == 2);
  CHECK(F("[0,3]->2,[4,w]->0", sw).eval(Point{OrdPoint{O("4")}}) == 0);
}

TEST_CASE("support and indicator") {
  Space sw = S("ord(w)");
  StepFunction f = F("[0,3]->3,[4,w]->0", sw);
  CHECK(f.support() == C("[0,3]", sw));
  CHECK(StepFunction::constant(sw, 0).support().is_empty());
  CHECK(F("[0,3]->2,[4,w]->1", sw).support() == Clopen::whole(sw));
}

TEST_CASE("archimedean witness frozen examples") {
  Space sw = S("ord(w)");
  StepFunction f = StepFunction::indicator(C("[0,0]", sw));
  StepFunction g = StepFunction::constant(sw, 5);
  auto n = archimedean_witness(f, g);
  REQUIRE(n.has_value());
  CHECK(*n == 6);
  CHECK_FALSE(leq(*n * f, g));

  CHECK_FALSE(archimedean_witness(StepFunction::constant(sw, -1), g).has_value());
  CHECK_FALSE(archimedean_witness(StepFunction::constant(sw, 0), g).has_value());

  auto n2 = archimedean_witness(StepFunction::constant(sw, 1), StepFunction::constant(sw, 0));
  REQUIRE(n2.has_value());
  CHECK(*n2 == 1);
}

TEST_CASE("step function literals round-trip") {
  testgen::Rng rng(301);
  CHECK(to_string(F("[0,3]->2,[4,w]->0", S("ord(w)"))) == "[4,w]->0,[0,3]->2");
  for (int i = 0; i < 200; ++i) {
    const Space& s = testgen::random_space(rng);
    StepFunction f = testgen::random_step_function(rng, s);
    CHECK(parse_step_function(to_string(f), s) == f);
  }
}

TEST_CASE("l-group laws on random triples") {
  testgen::Rng rng(302);
  for (int i = 0; i < 400; ++i) {
    const Space& s = testgen::random_space(rng);
    StepFunction f = testgen::random_step_function(rng, s);
    StepFunction g = testgen::random_step_function(rng, s);
    StepFunction h = testgen::random_step_function(rng, s);
    StepFunction zero = StepFunction::constant(s, 0);
    // Abelian group.
    CHECK(f + g == g + f);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + zero == f);
    CHECK(f + (-f) == zero);
    // Lattice.
    CHECK(meet(f, g) == meet(g, f));
    CHECK(join(f, g) == join(g, f));
    CHECK(meet(meet(f, g), h) == meet(f, meet(g, h)));
    CHECK(join(join(f, g), h) == join(f, join(g, h)));
    CHECK(join(f, meet(f, g)) == f);
    CHECK(meet(f, join(f, g)) == f);
    // Translation invariance and compatibility.
    CHECK(meet(f, g) + h == meet(f + h, g + h));
    CHECK(leq(meet(f, g), g));
    CHECK(leq(meet(f, g) + h, g + h));
    // The l-group identity.
    CHECK(meet(f, g) + join(f, g) == f + g);
  }
}

TEST_CASE("archimedean witness contract on random pairs") {
  testgen::Rng rng(303);
  int nontrivial = 0;
  for (int i = 0; i < 400; ++i) {
    const Space& s = testgen::random_space(rng);
    StepFunction f = testgen::random_step_function(rng, s);
    StepFunction g = testgen::random_step_function(rng, s);
    auto n = archimedean_witness(f, g);
    if (n.has_value()) {
      ++nontrivial;
      CHECK(cmp(*n, 0) > 0);
      CHECK_FALSE(leq(*n * f, g));
    } else {
      CHECK(leq(f, StepFunction::constant(s, 0)));
    }
  }
  CHECK(nontrivial > 100);  // the generator produces plenty of f not <= 0
}

TEST_CASE("evaluation is a homomorphism at every point") {
  testgen::Rng rng(304);
  for (int i = 0; i < 300; ++i) {
    const Space& s = testgen::random_space(rng);
    StepFunction f = testgen::random_step_function(rng, s);
    StepFunction g = testgen::random_step_function(rng, s);
    Point p = testgen::random_point(rng, s);
    mpz_class a = f.eval(p), b = g.eval(p);
    CHECK((f + g).eval(p) == a + b);
    CHECK(meet(f, g).eval(p) == (cmp(a, b) <= 0 ? a : b));
    CHECK(join(f, g).eval(p) == (cmp(a, b) >= 0 ? a : b));
    CHECK((-f).eval(p) == -a);
  }
}

TEST_CASE("canonical form detects equality exactly") {
  testgen::Rng rng(305);
  for (int i = 0; i < 300; ++i) {
    const Space& s = testgen::random_space(rng);
    StepFunction f = testgen::random_step_function(rng, s);
    StepFunction g = testgen::random_step_function(rng, s);
    bool agree = true;
    for (const Point& p : refinement_samples(f, g))
      agree = agree && f.eval(p) == g.eval(p);
    CHECK((f == g) == agree);
  }
}
