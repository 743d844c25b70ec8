#include <doctest.h>

#include "anomcheck/symmetric.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Setup {
  RingPtr source = ring_new({{"pi1(T)", 4}, {"pi2(T)", 8}, {"pi3(T)", 12}, {"u", 2}}, 12);
  RingPtr target = ring_new({{"p1(TX)", 4}, {"p2(TX)", 8}, {"p3(TX)", 12}, {"c", 2}}, 12);
  RingPtr roots = ring_new({{"x1", 2}, {"x2", 2}, {"x3", 2}, {"w", 2}}, 12);
  std::vector<SymmetricFamily> families{{{"pi1(T)", "pi2(T)", "pi3(T)"}, {"p1(TX)", "p2(TX)", "p3(TX)"}}};
  std::vector<Passthrough> pass{{"u", "c"}};

  // Brute-force images of the power sums and elementary functions in explicit roots.
  std::vector<Form> power_images() const {
    std::vector<Form> sq;
    for (const char* n : {"x1", "x2", "x3"}) sq.push_back(gen(roots, n) * gen(roots, n));
    std::vector<Form> out;
    for (int n = 1; n <= 3; ++n) {
      Form s = Form::zero(roots);
      for (const auto& x : sq) s += pow(x, n);
      out.push_back(s);
    }
    out.push_back(gen(roots, "w"));
    return out;
  }
  std::vector<Form> elementary_images() const {
    std::vector<Form> sq;
    for (const char* n : {"x1", "x2", "x3"}) sq.push_back(gen(roots, n) * gen(roots, n));
    return {sq[0] + sq[1] + sq[2], sq[0] * sq[1] + sq[0] * sq[2] + sq[1] * sq[2], sq[0] * sq[1] * sq[2],
            gen(roots, "w")};
  }
};

}  // namespace

TEST_SUITE("symmetric") {

TEST_CASE("Newton identities on generators") {
  Setup s;
  CHECK(render(newton_reduce(gen(s.source, "pi1(T)"), s.target, s.families, s.pass)) == "p1(TX)");
  CHECK(render(newton_reduce(gen(s.source, "pi2(T)"), s.target, s.families, s.pass)) == "p1(TX)^2 - 2*p2(TX)");
  CHECK(render(newton_reduce(gen(s.source, "u") * gen(s.source, "u"), s.target, s.families, s.pass)) == "c^2");
  CHECK(render(newton_reduce(gen(s.source, "pi3(T)"), s.target, s.families, s.pass)) ==
        "p1(TX)^3 - 3*p1(TX)*p2(TX) + 3*p3(TX)");
}

TEST_CASE("reduction agrees with explicit roots") {
  Setup s;
  std::mt19937 rng(11);
  auto pi = s.power_images();
  auto e = s.elementary_images();
  for (int trial = 0; trial < 20; ++trial) {
    Form a = random_form(s.source, rng);
    Form reduced = newton_reduce(a, s.target, s.families, s.pass);
    CHECK(apply_homomorphism(a, s.roots, pi) == apply_homomorphism(reduced, s.roots, e));
    CHECK(newton_expand(reduced, s.source, s.families, {{"c", "u"}}) == a);
  }
}

TEST_CASE("symmetric reduction from roots") {
  Setup s;
  std::vector<RootFamily> fam{{{"x1", "x2", "x3"}, {"p1(TX)", "p2(TX)", "p3(TX)"}}};
  std::vector<Passthrough> pass{{"w", "c"}};
  auto e = s.elementary_images();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Form a = random_form(s.source, rng);
    Form in_roots = apply_homomorphism(a, s.roots, s.power_images());
    Form reduced = symmetric_reduce(in_roots, s.target, fam, pass);
    CHECK(reduced == newton_reduce(a, s.target, s.families, s.pass));
    CHECK(apply_homomorphism(reduced, s.roots, e) == in_roots);
  }
  CHECK_THROWS_AS(symmetric_reduce(gen(s.roots, "x1"), s.target, fam, pass), InternalError);
}

}  // TEST_SUITE
