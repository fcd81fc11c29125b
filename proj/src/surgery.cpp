#include "fourfold/surgery.hpp"

#include <algorithm>

#include "fourfold/admissibility.hpp"

namespace fourfold {

namespace {

constexpr const char* kLuttingerSymplectic =
    "Luttinger surgery: the symplectic form survives off the surgery region";
constexpr const char* kLuttingerTaubes =
    "Taubes, applied to the canonical class of the surgered symplectic manifold";
constexpr const char* kSurgeredProductSij =
    "surgered product manifold: canonical class supported away from the surgered Lagrangian tori";
constexpr const char* kUndoPreservesAxioms =
    "undoing a Luttinger surgery re-introduces the hyperbolic pair and preserves the "
    "admissibility axioms";
constexpr const char* kBauerFurutaSum =
    "nonvanishing of the stable cohomotopy invariant for a connected sum of 2 or 3 admissible "
    "pieces and a b+=0 remainder";

// "2(S1xS3) # 3(CP2bar)" style, grouping repeats while preserving first
// occurrence order.
std::string sum_name(const std::vector<ManifoldDescriptor>& parts) {
  std::vector<std::pair<std::string, int>> groups;
  for (const auto& p : parts) {
    if (!groups.empty() && groups.back().first == p.name) {
      ++groups.back().second;
    } else {
      groups.emplace_back(p.name, 1);
    }
  }
  std::string out;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i) out += " # ";
    if (groups[i].second > 1) {
      out += std::to_string(groups[i].second) + "(" + groups[i].first + ")";
    } else {
      out += groups[i].first;
    }
  }
  return out;
}

bool all_b1_known(const std::vector<ManifoldDescriptor>& parts) {
  return std::all_of(parts.begin(), parts.end(),
                     [](const ManifoldDescriptor& p) { return p.b1.is_known(); });
}

}  // namespace

TorusSurgerySpec TorusSurgerySpec::kill(bool luttinger, std::int64_t q) {
  return {Effect::KillClass, 0, luttinger, 1, q};
}

TorusSurgerySpec TorusSurgerySpec::undo(bool luttinger, std::int64_t q) {
  return {Effect::UndoKill, 0, luttinger, 1, q};
}

TorusSurgerySpec TorusSurgerySpec::add_torsion(std::int64_t p, std::int64_t q) {
  return {Effect::AddTorsion, p, false, p, q};
}

ManifoldDescriptor connected_sum(const std::vector<ManifoldDescriptor>& parts) {
  if (parts.empty()) throw EmptyList("connected sum of an empty list");
  if (parts.size() == 1) return parts.front();
  const auto k = static_cast<std::int64_t>(parts.size());

  ManifoldDescriptor out;
  out.name = sum_name(parts);
  out.euler = -2 * (k - 1);
  out.signature = 0;
  for (const auto& p : parts) {
    out.euler += p.euler;
    out.signature += p.signature;
  }

  if (all_b1_known(parts)) {
    std::int64_t b1 = 0;
    for (const auto& p : parts) b1 += p.b1.value();
    out.b1 = Knowledge<std::int64_t>::known(b1);
  }

  out.w2 = W2Type::Spin;
  for (const auto& p : parts) {
    if (p.w2 == W2Type::NonSpin) {
      out.w2 = W2Type::NonSpin;
      break;
    }
    if (p.w2 == W2Type::Unknown) out.w2 = W2Type::Unknown;
  }

  // Gromov: || M1 # M2 || = ||M1|| + ||M2||; interval addition otherwise.
  {
    bool unknown = false, bounded = false;
    std::int64_t lo = 0, hi = 0;
    for (const auto& p : parts) {
      if (p.simplicial_volume.is_unknown()) {
        unknown = true;
        break;
      }
      lo += p.simplicial_volume.lo();
      hi += p.simplicial_volume.hi();
      bounded |= p.simplicial_volume.is_bounded();
    }
    if (!unknown) {
      out.simplicial_volume = bounded ? Knowledge<std::int64_t>::bounded(lo, hi)
                                      : Knowledge<std::int64_t>::known(lo);
    }
  }

  // Volume entropy is insensitive to nonessential summands: with at most one
  // essential part, the sum's mu^4 is that part's.
  {
    const ManifoldDescriptor* essential = nullptr;
    int essential_count = 0;
    for (const auto& p : parts) {
      if (!p.nonessential()) {
        essential = &p;
        ++essential_count;
      }
    }
    if (essential_count == 0) {
      out.entropy4 = Knowledge<PiQuantity>::known(PiQuantity());
    } else if (essential_count == 1) {
      out.entropy4 = essential->entropy4;
    }
  }

  {
    const Pi1Tag* nontrivial = nullptr;
    int nontrivial_count = 0;
    for (const auto& p : parts) {
      if (!(p.pi1 == Pi1Tag::trivial())) {
        nontrivial = &p.pi1;
        ++nontrivial_count;
      }
    }
    if (nontrivial_count == 0) {
      out.pi1 = Pi1Tag::trivial();
    } else if (nontrivial_count == 1) {
      out.pi1 = *nontrivial;
    } else {
      out.pi1 = Pi1Tag::other("free product");
    }
  }

  // Certificate propagation: the only rule for sums is the nonvanishing
  // theorem for 2 or 3 admissible pieces with a b+ = 0 remainder.
  {
    int admissible = 0;
    bool rest_ok = true;
    for (const auto& p : parts) {
      if (check_bf(p).overall.is_holds()) {
        ++admissible;
        continue;
      }
      if (!p.b1.is_known()) {
        rest_ok = false;
        continue;
      }
      try {
        if (derive_betti(p).b_plus != 0) rest_ok = false;
      } catch (const Error&) {
        rest_ok = false;
      }
    }
    if ((admissible == 2 || admissible == 3) && rest_ok) {
      out.add_certificate({CertificateKind::BFNonvanishing, kBauerFurutaSum});
    }
  }

  out.trace = {"sum: " + out.name};
  return out;
}

ManifoldDescriptor torus_surgery(const ManifoldDescriptor& d, const TorusSurgerySpec& spec) {
  if (spec.coeff_q == 0 && spec.coeff_p == 0) throw InvalidParameters("0/0 surgery coefficient");
  if (spec.symplectic_luttinger && spec.coeff_p != 1) {
    throw InvalidParameters("a Luttinger surgery is a 1/q transform: coefficient p must be 1");
  }
  if (spec.effect == TorusSurgerySpec::Effect::AddTorsion) {
    if (spec.torsion < 1) throw InvalidParameters("torsion order must be >= 1");
    if (spec.coeff_p != spec.torsion) {
      throw InvalidParameters("torsion order must equal the surgery coefficient p");
    }
  }
  if (!d.b1.is_known()) throw InsufficientHomology("torus surgery requires Known b1");

  ManifoldDescriptor out;
  out.euler = d.euler;
  out.signature = d.signature;
  out.w2 = d.w2;
  out.trace = d.trace;

  const std::string coeff_str =
      std::to_string(spec.coeff_p) + "/" + std::to_string(spec.coeff_q);
  const std::string luttinger_str = spec.symplectic_luttinger ? " luttinger" : "";

  switch (spec.effect) {
    case TorusSurgerySpec::Effect::KillClass: {
      const BettiData betti = derive_betti(d);
      if (d.b1.value() < 1 || betti.b2 < 2) {
        throw InsufficientHomology("killing a class needs b1 >= 1 and b2 >= 2");
      }
      out.b1 = Knowledge<std::int64_t>::known(d.b1.value() - 1);
      out.pi1 = Pi1Tag::other("surgered");
      out.name = d.name + "/kill";
      out.trace.push_back("surgery:kill coeff=" + coeff_str + luttinger_str);
      break;
    }
    case TorusSurgerySpec::Effect::UndoKill: {
      out.b1 = Knowledge<std::int64_t>::known(d.b1.value() + 1);
      out.pi1 = Pi1Tag::other("surgered");
      out.name = d.name + "/undo";
      out.trace.push_back("surgery:undo coeff=" + coeff_str + luttinger_str);
      break;
    }
    case TorusSurgerySpec::Effect::AddTorsion: {
      out.b1 = d.b1;
      out.pi1 = d.pi1.with_torsion(spec.torsion);
      out.name = d.name + "/tor" + std::to_string(spec.torsion);
      out.trace.push_back("surgery:torsion p=" + std::to_string(spec.torsion) +
                          " coeff=" + coeff_str + luttinger_str);
      break;
    }
  }

  // Closed allowlist of propagation rules; everything else is dropped.
  if (spec.symplectic_luttinger) {
    if (d.has_certificate(CertificateKind::Symplectic)) {
      out.add_certificate({CertificateKind::Symplectic, kLuttingerSymplectic});
    }
    if (d.has_certificate(CertificateKind::SWOddCanonical)) {
      out.add_certificate({CertificateKind::SWOddCanonical, kLuttingerTaubes});
    }
    if (d.has_certificate(CertificateKind::SijEven) && surgered_product_lineage(d)) {
      out.add_certificate({CertificateKind::SijEven, kSurgeredProductSij});
    }
    if (spec.effect == TorusSurgerySpec::Effect::UndoKill &&
        d.origin().rfind("block:minimal-sc", 0) == 0 && d.b1.is_known()) {
      // Undoing a Luttinger surgery on one of the minimal simply connected
      // lattice blocks keeps every admissibility axiom, provided the block
      // sits in the b+ == 3 (mod 4) half.
      try {
        if (((derive_betti(d).b_plus % 4) + 4) % 4 == 3) {
          out.add_certificate({CertificateKind::Symplectic, kUndoPreservesAxioms});
          out.add_certificate({CertificateKind::SWOddCanonical, kUndoPreservesAxioms});
          out.add_certificate({CertificateKind::SijEven, kUndoPreservesAxioms});
        }
      } catch (const Error&) {
        // inconsistent input descriptor: no grant
      }
    }
  }

  return out;
}

ManifoldDescriptor blow_up(const ManifoldDescriptor& d, std::int64_t n) {
  if (n < 1) throw InvalidParameters("blow-up count must be >= 1");
  ManifoldDescriptor out;
  out.name = d.name + " # " + std::to_string(n) + "(CP2bar)";
  out.euler = d.euler + n;
  out.signature = d.signature - n;
  out.b1 = d.b1;
  out.pi1 = d.pi1;
  out.w2 = W2Type::NonSpin;
  out.simplicial_volume = d.simplicial_volume;
  out.entropy4 = d.nonessential() ? Knowledge<PiQuantity>::known(PiQuantity()) : d.entropy4;
  if (d.has_certificate(CertificateKind::Symplectic)) {
    out.add_certificate({CertificateKind::Symplectic, "symplectic blow-up"});
  }
  out.trace = d.trace;
  out.trace.push_back("blow-up: n=" + std::to_string(n));
  return out;
}

}  // namespace fourfold
