#ifndef FOURFOLD_FAMILIES_HPP
#define FOURFOLD_FAMILIES_HPP

#include <map>
#include <string>
#include <vector>

#include "fourfold/manifold.hpp"
#include "fourfold/obstructions.hpp"

namespace fourfold {

/// kappa(g,h) = 4(g-1)(h-1) - 24(g-1)(h-1) / (C pi^2) with C = 1295 for the
/// Ricci-flow variant and C = 81 for the Einstein variant. Strictly positive
/// for g, h >= 2.
PiQuantity kappa_constant(std::int64_t g, std::int64_t h, int variant);

/// Bounded search for parameter tuples (g, h, l1, l2[, alpha, beta]) making
///   M = (# summands) # (Sigma_h x Sigma_g) # l1 (S1 x S3) # l2 CP2bar
/// satisfy the full inequality system of the targeted property. g, h run
/// over odd integers >= 3; l1, l2 >= 1; the mu variant additionally searches
/// a Gompf factor over alpha >= 2, beta >= 0 with 4 alpha + 2 beta - 1 == 3
/// (mod 4).
struct WitnessQuery {
  PropertyKind kind = PropertyKind::R;
  std::vector<ManifoldDescriptor> summands;  // j = 1 or 2 pieces (mu: exactly 1)
  std::int64_t g_max = 3;
  std::int64_t h_max = 3;
  std::int64_t l1_max = 1;
  std::int64_t l2_max = 1;
  std::int64_t alpha_max = 2;  // mu only
  std::int64_t beta_max = 0;   // mu only
};

struct Witness {
  std::int64_t g = 0, h = 0, l1 = 0, l2 = 0;
  std::int64_t alpha = -1, beta = -1;  // mu only, -1 otherwise
  /// Exact margins, strictly positive under pq_sign, one per condition.
  std::vector<std::pair<std::string, PiQuantity>> margins;
  /// The band endpoints of the middle quantity 4(j+l1)+l2: band_hi > middle > band_lo.
  PiQuantity band_hi, band_lo;
  std::int64_t middle = 0;
  ManifoldDescriptor manifold;
  Verdict property;
  /// Set when a summand belongs to the homotopy K3 family: the witness then
  /// represents a countable family of smooth structures, not a single one.
  bool infinite_family = false;
};

/// Exhaustive within bounds, ordered lexicographically in
/// (g, h, l1, l2[, alpha, beta]). An empty result is a value, not an error.
std::vector<Witness> find_witnesses(const WitnessQuery& q,
                                    const PiSquareInterval& pi2 = default_pi2_interval());

/// Grid ranges for the lemma checker, inclusive.
struct Range {
  std::int64_t lo = 0, hi = 0;
};

struct GridSpec {
  Range j{1, 1};
  Range k{1, 1};
  Range g{3, 3};
  Range h{3, 3};
  Range l1{1, 1};
  Range l2{1, 1};
  Range alpha{2, 2};
  Range beta{0, 0};
};

/// One grid point of a closed-form audit: the formula as printed, the value
/// derived from primitive additivity, and their difference. The checker
/// reports residuals; it never adjudicates which side is correct.
struct ResidualEntry {
  std::map<std::string, std::int64_t> point;
  Rational stated;
  Rational derived;
  Rational residual;  // stated - derived
};

struct ResidualReport {
  std::string formula_id;
  std::vector<ResidualEntry> entries;
  bool all_zero = true;
  Rational max_abs_residual;
};

std::vector<std::string> lemma_formula_ids();

/// Audits the given closed form on the grid. Summand-dependent forms use K3
/// pieces; the residuals are independent of that choice.
ResidualReport lemma_check(const std::string& formula_id, const GridSpec& grid);

}  // namespace fourfold

#endif
