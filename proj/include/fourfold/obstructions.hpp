#ifndef FOURFOLD_OBSTRUCTIONS_HPP
#define FOURFOLD_OBSTRUCTIONS_HPP

#include <variant>
#include <vector>

#include "fourfold/manifold.hpp"

namespace fourfold {

enum class PropertyKind { R, E, Mu };

std::string property_kind_str(PropertyKind k);

/// Curvature estimates available on a connected sum of 2 or 3 admissible
/// pieces and a b+ = 0 remainder: the L2 scalar curvature bound, the mixed
/// scalar/self-dual-Weyl bound, and the resulting Yamabe and lambda_k upper
/// bounds.
struct CurvatureBounds {
  Rational c1sq_sum;       // sum of c1^2 over the admissible summands only
  PiQuantity scalar_l2;    // integral s^2  >= 32 pi^2 * sum
  PiQuantity weyl_mixed;   // integral (s - sqrt6 |W+|)^2 >= 72 pi^2 * sum
  RadicalBound yamabe_upper;  // Y(M) <= -4 pi sqrt(2 sum)

  /// lambda_k(M) <= -4 k pi sqrt(2 sum); defined for k >= 2/3 (= (n-2)/(n-1)
  /// in dimension 4).
  RadicalBound lambda_k_upper(const Rational& k) const;
};

CurvatureBounds curvature_bounds(const std::vector<ManifoldDescriptor>& summands,
                                 const ManifoldDescriptor& N);

/// lambda_k from the Yamabe invariant: k*Y when Y <= 0 and k >= 2/3,
/// +infinity when Y > 0 and k > 0, undetermined otherwise.
struct LambdaK {
  enum class Kind { Value, PlusInfinity, Undetermined } kind = Kind::Undetermined;
  Rational value;

  static LambdaK of(Rational v) { return {Kind::Value, std::move(v)}; }
  static LambdaK plus_infinity() { return {Kind::PlusInfinity, Rational(0)}; }
  static LambdaK undetermined() { return {Kind::Undetermined, Rational(0)}; }
  friend bool operator==(const LambdaK&, const LambdaK&) = default;
};

LambdaK lambda_k_from_yamabe(const Rational& k, const Rational& yamabe);

/// Exact negative bounds are either rational or of radical form.
using ScalarBound = std::variant<Rational, RadicalBound>;

/// min_x s_{g(t)} <= lambda_k_bar / (k vol^{2/n}) for any normalized Ricci
/// flow solution; exact for n = 2 and n = 4 (vol^{1/2} folds into the
/// radical when vol is not a perfect square).
ScalarBound min_scalar_bound(const ScalarBound& lambda_k_bar, const Rational& k,
                             const Rational& vol, int n);

/// Ricci-flow obstruction for M = (# summands) # N: Holds (no
/// quasi-non-singular solution exists) iff
///   4n - (2e(N) + 3 sigma(N)) > (1/3) sum c1^2(X_m),
/// decided exactly. The assembled connected sum carries a
/// NoQuasiNonsingularRicci certificate when the verdict holds.
struct ObstructionOutcome {
  Verdict verdict;
  ManifoldDescriptor obstructed_sum;
};

ObstructionOutcome ricci_flow_obstruction(const std::vector<ManifoldDescriptor>& summands,
                                          const ManifoldDescriptor& N);

/// The Hitchin-Thorpe family of verdicts for one descriptor. Margins are
/// exact; entropy_54 compares against the mu^4 interval and is Undetermined
/// when the interval straddles the characteristic-number side.
struct HTReport {
  Verdict classic;      // 2e - 3|sigma| >= 0
  Verdict gromov_1295;  // 2e - 3|sigma| vs ||X|| / (1295 pi^2)
  Verdict gromov_81;    // 2e - 3|sigma| vs ||X|| / (81 pi^2)
  Verdict entropy_54;   // 2e - 3|sigma| vs mu^4 / (54 pi^2)
};

HTReport ht_report(const ManifoldDescriptor& d, bool strict,
                   const PiSquareInterval& pi2 = default_pi2_interval());

/// Property R / E / mu packages: nonzero invariant + strict inequality +
/// obstruction certificates. Undetermined when the inequalities hold but a
/// certificate is missing.
Verdict property_check(const ManifoldDescriptor& d, PropertyKind kind,
                       const PiSquareInterval& pi2 = default_pi2_interval());

/// Formal monopole classes +-c1(X) +- c1(Y_m) + sum +-E_i of the connected
/// sum with a homotopy K3 piece and a b+ = 0 remainder N. The formal count
/// is 2^(2 + b2(N)); a summand with vanishing canonical class halves the
/// distinct count.
struct MonopoleFamily {
  mpz_class formal_count;
  mpz_class distinct_count;
  std::vector<FormalClass> classes;  // materialized when small
};

MonopoleFamily monopole_family(const ManifoldDescriptor& x, const ManifoldDescriptor& ym,
                               const ManifoldDescriptor& N);

}  // namespace fourfold

#endif
