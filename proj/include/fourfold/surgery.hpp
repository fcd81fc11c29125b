#ifndef FOURFOLD_SURGERY_HPP
#define FOURFOLD_SURGERY_HPP

#include <cstdint>
#include <vector>

#include "fourfold/manifold.hpp"

namespace fourfold {

/// A generalized logarithmic p/q transform along a self-intersection-zero
/// torus, tracked purely through its effect on homology. Three effects occur
/// in this calculus:
///   KillClass  - meridian nullhomologous, push-off essential: b1 drops by 1
///                and the surgered hyperbolic pair dies (b2 drops by 2).
///   AddTorsion - torus and push-off nullhomologous: H1 gains a Z/p factor.
///   UndoKill   - reverse of KillClass: b1 rises by 1.
/// Luttinger surgeries are the symplectic 1/q transforms; only they carry
/// symplectic certificates through.
struct TorusSurgerySpec {
  enum class Effect { KillClass, AddTorsion, UndoKill };

  Effect effect = Effect::KillClass;
  std::int64_t torsion = 0;  // AddTorsion order p >= 1
  bool symplectic_luttinger = false;
  std::int64_t coeff_p = 1;
  std::int64_t coeff_q = 1;

  static TorusSurgerySpec kill(bool luttinger = true, std::int64_t q = 1);
  static TorusSurgerySpec undo(bool luttinger = true, std::int64_t q = 1);
  static TorusSurgerySpec add_torsion(std::int64_t p, std::int64_t q = 1);
};

/// Connected sum with exact bookkeeping:
///   e = sum e_i - 2(k-1), sigma = sum sigma_i, b1 = sum (when all known),
///   spin iff all spin, simplicial volume additive, volume entropy copied
///   from the unique essential summand when every other part is
///   nonessential. A BF-nonvanishing certificate is attached exactly when 2
///   or 3 parts are fully BF-admissible and every remaining part has b+ = 0.
ManifoldDescriptor connected_sum(const std::vector<ManifoldDescriptor>& parts);

ManifoldDescriptor torus_surgery(const ManifoldDescriptor& d, const TorusSurgerySpec& spec);

/// n symplectic blow-ups at points: e += n, sigma -= n, the result is
/// non-spin, b1 and the volume invariants are unchanged. Agrees with the
/// connected sum with n copies of CP2bar on all tracked fields.
ManifoldDescriptor blow_up(const ManifoldDescriptor& d, std::int64_t n);

}  // namespace fourfold

#endif
