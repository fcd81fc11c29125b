#include "doctest.h"
#include "fourfold/admissibility.hpp"
#include "fourfold/blocks.hpp"
#include "fourfold/surgery.hpp"

using namespace fourfold;
using namespace fourfold::blocks;

TEST_SUITE_BEGIN("admissibility");

TEST_CASE("odd-genus surface products are admissible") {
  const BFVerdict v = check_bf(make_block(SurfaceProduct{3, 3}));
  CHECK(v.cond1.is_holds());
  CHECK(v.cond2.is_holds());
  CHECK(v.cond3.is_holds());
  CHECK(v.overall.is_holds());

  for (std::int64_t g = 1; g <= 9; g += 2) {
    for (std::int64_t h = 1; h <= 9; h += 2) {
      CHECK(check_bf(make_block(SurfaceProduct{g, h})).overall.is_holds());
    }
  }
}

TEST_CASE("even and mixed genus products") {
  // Sigma_2 x Sigma_2: b+ - b1 = 9 - 8 = 1, the congruence fails
  const BFVerdict even = check_bf(make_block(SurfaceProduct{2, 2}));
  CHECK(even.cond2.is_fails());
  CHECK(even.overall.is_fails());

  // mixed parity: congruence holds but the pairing certificate is absent;
  // nothing is guessed
  const BFVerdict mixed = check_bf(make_block(SurfaceProduct{2, 3}));
  CHECK(mixed.cond2.is_holds());
  CHECK(mixed.cond3.is_undetermined());
  CHECK(mixed.overall.is_undetermined());
}

TEST_CASE("b1 = 0 reduces to the b+ congruence") {
  CHECK(check_bf(make_block(K3{})).overall.is_holds());
  CHECK(check_bf(make_block(HomotopyK3{7})).overall.is_holds());

  // Gompf: admissible exactly when b+ = 4a + 2b - 1 == 3 (mod 4)
  CHECK(check_bf(make_block(Gompf{2, 1})).overall.is_fails());
  CHECK(check_bf(make_block(Gompf{2, 2})).overall.is_holds());
  for (std::int64_t alpha = 2; alpha <= 10; ++alpha) {
    for (std::int64_t beta = 0; beta <= 10; ++beta) {
      const BFVerdict v = check_bf(make_block(Gompf{alpha, beta}));
      const bool congruent = ((4 * alpha + 2 * beta - 1) % 4 + 4) % 4 == 3;
      CHECK(v.overall.is_holds() == congruent);
      CHECK(v.cond3.is_holds());  // vacuous at b1 = 0
    }
  }

  // for b1 = 0 descriptors the verdict only depends on cond1 and b+ (mod 4)
  const ManifoldDescriptor cp2bar = make_block(CP2Bar{});
  const BFVerdict small = check_bf(cp2bar);
  CHECK(small.cond2.is_fails());  // b+ = 0, not > 1
  CHECK(small.overall.is_fails());
}

TEST_CASE("uncertified manifolds come back undetermined, not failed") {
  ManifoldDescriptor d;
  d.name = "bare";
  d.euler = 24;
  d.signature = -16;
  d.b1 = Knowledge<std::int64_t>::known(0);
  d.pi1 = Pi1Tag::trivial();
  d.w2 = W2Type::NonSpin;
  const BFVerdict v = check_bf(d);
  CHECK(v.cond1.is_undetermined());
  CHECK(v.cond2.is_holds());
  CHECK(v.overall.is_undetermined());

  d.b1 = Knowledge<std::int64_t>::unknown();
  const BFVerdict u = check_bf(d);
  CHECK(u.cond2.is_undetermined());
  CHECK(u.overall.is_undetermined());
}

TEST_CASE("cond2 is invariant under class-killing surgeries") {
  for (std::int64_t g : {1, 3, 5}) {
    for (std::int64_t h : {1, 3}) {
      ManifoldDescriptor d = make_block(SurfaceProduct{g, h});
      const VerdictState before = check_bf(d).cond2.state;
      // as in the underlying surgery lemma, keep one hyperbolic pair alive
      // (b+ > 1 survives); the congruence b+ - b1 == 3 (mod 4) is untouched
      const std::int64_t drops =
          std::min({std::int64_t{3}, d.b1.value(), derive_betti(d).b_plus - 2});
      for (std::int64_t i = 0; i < drops; ++i) {
        d = torus_surgery(d, TorusSurgerySpec::kill(true, 1));
        CHECK(check_bf(d).cond2.state == before);
      }
    }
  }
}

TEST_CASE("lattice family manifolds are admissible") {
  CHECK(check_bf(make_block(IrreducibleZ{10, -2})).overall.is_holds());
  CHECK(check_bf(make_block(IrreducibleZp{10, -2, 5})).overall.is_holds());
  CHECK(check_bf(make_block(IrreducibleZ{24, -8})).overall.is_holds());
  CHECK(check_bf(make_block(PrimaryKodaira{})).overall.is_holds());
}

TEST_SUITE_END();
