#include <set>

#include "doctest.h"
#include "fourfold/blocks.hpp"
#include "fourfold/families.hpp"
#include "fourfold/obstructions.hpp"
#include "oracles.hpp"

using namespace fourfold;
using namespace fourfold::blocks;

namespace {

using Tuple = std::array<std::int64_t, 4>;

// Independent brute-force enumeration of the three-inequality system for the
// 1295 pi^2 variant, decided against the frozen 60-digit bracket.
std::set<Tuple> brute_force_r(const std::vector<ManifoldDescriptor>& summands, std::int64_t gmax,
                              std::int64_t hmax, std::int64_t l1max, std::int64_t l2max) {
  std::int64_t sum_plus = 0, sum_minus = 0, norm = 0;
  const auto j = static_cast<std::int64_t>(summands.size());
  for (const auto& s : summands) {
    sum_plus += 2 * s.euler + 3 * s.signature;
    sum_minus += 2 * s.euler - 3 * s.signature;
    norm += s.simplicial_volume.value();
  }
  std::set<Tuple> out;
  for (std::int64_t g = 3; g <= gmax; g += 2) {
    for (std::int64_t h = 3; h <= hmax; h += 2) {
      const std::int64_t area = (g - 1) * (h - 1);
      for (std::int64_t l1 = 1; l1 <= l1max; ++l1) {
        for (std::int64_t l2 = 1; l2 <= l2max; ++l2) {
          const PiQuantity m2(Rational(sum_minus + 4 * area - 4 * (j + l1) + 5 * l2), 0,
                              Rational(-24 * area - norm, 1295));
          const PiQuantity m3(Rational(sum_plus + 4 * area - 4 * (j + l1) - l2), 0,
                              Rational(-24 * area - norm, 1295));
          const Rational m4 =
              Rational(4 * (j + l1) + l2) - Rational(sum_plus + 4 * area, 3);
          if (oracle::decimal_sign(m2) > 0 && oracle::decimal_sign(m3) > 0 && m4.sign() > 0) {
            out.insert({g, h, l1, l2});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("families");

TEST_CASE("kappa constants") {
  CHECK(kappa_constant(1, 7, 1295).is_zero());
  CHECK(kappa_constant(7, 1, 81).is_zero());

  const PiQuantity k33 = kappa_constant(3, 3, 1295);
  CHECK(k33 == PiQuantity(16, 0, Rational(-96, 1295)));
  CHECK(pq_sign(k33) == Sign::Positive);
  CHECK(pq_to_decimal(k33, 6).text == "15.992488");

  const PiQuantity k33e = kappa_constant(3, 3, 81);
  CHECK(k33e == PiQuantity(16, 0, Rational(-96, 81)));
  CHECK(pq_to_decimal(k33e, 6).text == "15.879915");

  // strictly positive for g, h >= 2
  for (std::int64_t g = 2; g <= 6; ++g) {
    for (std::int64_t h = 2; h <= 6; ++h) {
      CHECK(pq_sign(kappa_constant(g, h, 1295)) == Sign::Positive);
      CHECK(pq_sign(kappa_constant(g, h, 81)) == Sign::Positive);
    }
  }

  CHECK_THROWS_AS(kappa_constant(0, 3, 1295), InvalidParameters);
  CHECK_THROWS_AS(kappa_constant(3, 3, 100), InvalidParameters);
}

TEST_CASE("the documented witness for two Sigma3xSigma3 summands") {
  WitnessQuery q;
  q.kind = PropertyKind::R;
  q.summands = {make_block(SurfaceProduct{3, 3}), make_block(SurfaceProduct{3, 3})};
  q.g_max = 5;
  q.h_max = 5;
  q.l1_max = 12;
  q.l2_max = 4;
  const auto witnesses = find_witnesses(q);
  REQUIRE(!witnesses.empty());

  const auto found =
      std::find_if(witnesses.begin(), witnesses.end(), [](const Witness& w) {
        return w.g == 5 && w.h == 5 && w.l1 == 9 && w.l2 == 1;
      });
  REQUIRE(found != witnesses.end());
  CHECK(found->middle == 45);
  // A ~ 127.95 > 45 > B = 128/3 ~ 42.67
  CHECK(pq_to_decimal(found->band_hi, 2).text == "127.95");
  CHECK(found->band_lo == PiQuantity::rational(Rational(128, 3)));
  for (const auto& [label, margin] : found->margins) {
    CHECK(pq_sign(margin) == Sign::Positive);
  }
  CHECK(found->property.is_holds());
  CHECK(found->manifold.has_certificate(CertificateKind::BFNonvanishing));
  CHECK(found->manifold.has_certificate(CertificateKind::NegativeLambdaBar));
  CHECK(found->manifold.has_certificate(CertificateKind::NoQuasiNonsingularRicci));
  CHECK(!found->infinite_family);

  // enumerator equals the independent brute-force oracle, as a set
  const std::set<Tuple> oracle_set = brute_force_r(q.summands, 5, 5, 12, 4);
  std::set<Tuple> enumerated;
  for (const auto& w : witnesses) enumerated.insert({w.g, w.h, w.l1, w.l2});
  CHECK(enumerated == oracle_set);
  CHECK(enumerated.size() == witnesses.size());  // no duplicates

  // lexicographic order
  for (size_t i = 1; i < witnesses.size(); ++i) {
    const Tuple a{witnesses[i - 1].g, witnesses[i - 1].h, witnesses[i - 1].l1, witnesses[i - 1].l2};
    const Tuple b{witnesses[i].g, witnesses[i].h, witnesses[i].l1, witnesses[i].l2};
    CHECK(a < b);
  }
}

TEST_CASE("witness re-verification against the assembled manifold") {
  WitnessQuery q;
  q.kind = PropertyKind::R;
  q.summands = {make_block(K3{}), make_block(SurfaceProduct{3, 3})};
  q.g_max = 7;
  q.h_max = 5;
  q.l1_max = 6;
  q.l2_max = 6;
  const auto witnesses = find_witnesses(q);
  REQUIRE(!witnesses.empty());
  for (const auto& w : witnesses) {
    for (const auto& [label, margin] : w.margins) {
      CHECK(pq_sign(margin) == Sign::Positive);
    }
    CHECK(w.property.is_holds());
    const HTReport ht = ht_report(w.manifold, /*strict=*/true);
    CHECK(ht.gromov_1295.is_holds());
    CHECK(w.manifold.has_certificate(CertificateKind::BFNonvanishing));
    // K3 summand: the homotopy K3 family makes this a countable family
    CHECK(w.infinite_family);
  }
}

TEST_CASE("empty bounds give an empty result, not an error") {
  WitnessQuery q;
  q.kind = PropertyKind::R;
  q.summands = {make_block(SurfaceProduct{3, 3})};
  q.g_max = 3;
  q.h_max = 3;
  q.l1_max = 0;
  q.l2_max = 0;
  CHECK(find_witnesses(q).empty());
}

TEST_CASE("Einstein variant runs on the 81 pi^2 constant") {
  WitnessQuery q;
  q.kind = PropertyKind::E;
  q.summands = {make_block(SurfaceProduct{3, 3}), make_block(SurfaceProduct{3, 3})};
  q.g_max = 5;
  q.h_max = 5;
  q.l1_max = 12;
  q.l2_max = 4;
  const auto witnesses = find_witnesses(q);
  REQUIRE(!witnesses.empty());
  for (const auto& w : witnesses) {
    CHECK(w.property.is_holds());
    CHECK(w.manifold.has_certificate(CertificateKind::NoEinstein));
    CHECK(ht_report(w.manifold, true).gromov_81.is_holds());
  }
}

TEST_CASE("mu variant: congruence filter and entropy verdicts") {
  WitnessQuery q;
  q.kind = PropertyKind::Mu;
  q.summands = {make_block(K3{})};
  q.g_max = 3;
  q.h_max = 3;
  q.l1_max = 2;
  q.l2_max = 2;
  q.alpha_max = 3;
  q.beta_max = 4;
  const auto witnesses = find_witnesses(q);
  REQUIRE(!witnesses.empty());
  bool seen_3311 = false;
  for (const auto& w : witnesses) {
    CHECK(((4 * w.alpha + 2 * w.beta - 1) % 4 + 4) % 4 == 3);
    CHECK(w.property.is_holds());
    CHECK(ht_report(w.manifold, true).entropy_54.is_holds());
    seen_3311 |= (w.g == 3 && w.h == 3 && w.l1 == 1 && w.l2 == 1 && w.alpha == 2 && w.beta == 2);
  }
  CHECK(seen_3311);

  // a summand without the nonessential certificate is rejected
  WitnessQuery bad = q;
  bad.summands = {make_block(SurfaceProduct{3, 3})};
  CHECK_THROWS_AS(find_witnesses(bad), PreconditionFailed);
}

TEST_CASE("band arithmetic: A - B identity and monotonicity") {
  const auto sp = make_block(SurfaceProduct{3, 3});
  WitnessQuery q;
  q.kind = PropertyKind::R;
  q.summands = {sp, sp};
  q.g_max = 9;
  q.h_max = 9;
  q.l1_max = 1;
  q.l2_max = 1;

  const std::int64_t cj = 64, norm = 192;
  PiQuantity last_width;
  bool have_last = false;
  for (std::int64_t g = 3; g <= 9; g += 2) {
    const std::int64_t area = (g - 1) * (g - 1);
    const PiQuantity a = PiQuantity::rational(Rational(cj)) + kappa_constant(g, g, 1295) -
                         PiQuantity::inv_pi_squared(Rational(norm, 1295));
    const PiQuantity b = PiQuantity::rational(Rational(cj + 4 * area, 3));
    // A - B = (2/3) c_j + (8/3 - 24/1295 pi^2)(g-1)(h-1) - ||X||/1295 pi^2
    const PiQuantity expect =
        PiQuantity(Rational(2 * cj, 3) + Rational(8, 3) * Rational(area), 0,
                   Rational(-24, 1295) * Rational(area) - Rational(norm, 1295));
    CHECK(a - b == expect);
    if (have_last) {
      CHECK(pq_sign((a - b) - last_width) == Sign::Positive);  // strictly increasing in area
    }
    last_width = a - b;
    have_last = true;
  }
}

TEST_CASE("summand gates") {
  WitnessQuery q;
  q.kind = PropertyKind::R;
  q.summands = {make_block(SurfaceProduct{2, 2})};  // not admissible
  q.g_max = 3;
  q.h_max = 3;
  q.l1_max = 1;
  q.l2_max = 1;
  CHECK_THROWS_AS(find_witnesses(q), PreconditionFailed);

  q.summands = {make_block(IrreducibleZ{10, -2})};  // admissible but unknown ||X||
  CHECK_THROWS_AS(find_witnesses(q), PreconditionFailed);

  q.summands = {};
  CHECK_THROWS_AS(find_witnesses(q), PreconditionFailed);

  q.summands = {make_block(K3{})};
  q.g_max = 1;
  CHECK_THROWS_AS(find_witnesses(q), InvalidParameters);
}

TEST_CASE("lemma checker: residual-zero forms") {
  GridSpec grid;
  grid.j = {1, 1};
  grid.k = {1, 1};
  grid.g = {3, 5};
  grid.h = {3, 5};
  grid.l1 = {1, 2};
  grid.l2 = {0, 2};
  const ResidualReport norm = lemma_check("connected-sum-norm", grid);
  CHECK(norm.all_zero);
  CHECK(norm.entries.size() == 3 * 3 * 2 * 3);  // inclusive integer ranges

  GridSpec gompf;
  gompf.alpha = {2, 6};
  gompf.beta = {0, 6};
  for (const char* id : {"gompf-b-plus", "gompf-2e-plus-3s", "gompf-2e-minus-3s"}) {
    const ResidualReport r = lemma_check(id, gompf);
    CHECK(r.all_zero);
    CHECK(r.entries.size() == 5 * 7);
  }
}

TEST_CASE("lemma checker: the factor-2 tension is reported, not asserted") {
  GridSpec grid;  // k = 1, j = 1, g = h = 3, l1 = l2 = 1
  const ResidualReport plus = lemma_check("connected-sum-2e-plus-3s", grid);
  CHECK(!plus.all_zero);
  REQUIRE(plus.entries.size() == 1);
  CHECK(plus.entries.front().residual == Rational(-16));  // -4k(g-1)(h-1)
  CHECK(plus.max_abs_residual == Rational(16));

  const ResidualReport minus = lemma_check("connected-sum-2e-minus-3s", grid);
  CHECK(minus.entries.front().residual == Rational(-16));

  GridSpec wide = grid;
  wide.k = {2, 2};
  wide.g = {5, 5};
  CHECK(lemma_check("connected-sum-2e-plus-3s", wide).entries.front().residual ==
        Rational(-4 * 2 * 4 * 2));

  const ResidualReport entropy = lemma_check("entropy-upper-coeff", grid);
  CHECK(entropy.entries.front().residual == Rational(-4, 27));

  const ResidualReport threshold = lemma_check("ricci-corollary-threshold", grid);
  CHECK(threshold.entries.front().residual == Rational(-16, 3));

  GridSpec lhs;
  lhs.j = {1, 2};
  const ResidualReport corner = lemma_check("ricci-corollary-lhs", lhs);
  REQUIRE(corner.entries.size() == 2);
  CHECK(corner.entries[0].residual == Rational(4));  // j = 1
  CHECK(corner.entries[1].residual == Rational(0));  // j = 2

  GridSpec typo;
  typo.l1 = {1, 1};
  typo.l2 = {2, 2};
  const ResidualReport n_char = lemma_check("ricci-corollary-n-characteristic", typo);
  CHECK(n_char.entries.front().residual == Rational(1));  // l2 - l1

  CHECK_THROWS_AS(lemma_check("no-such-formula", grid), UnknownFormulaId);
  CHECK(!lemma_formula_ids().empty());
}

TEST_SUITE_END();
