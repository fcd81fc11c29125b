#include "fourfold/manifold.hpp"

#include <algorithm>

namespace fourfold {

std::string verdict_state_str(VerdictState s) {
  switch (s) {
    case VerdictState::Holds: return "holds";
    case VerdictState::Fails: return "fails";
    case VerdictState::Undetermined: return "undetermined";
  }
  return "?";
}

Verdict Verdict::holds(std::string reason, std::optional<PiQuantity> margin) {
  Verdict v;
  v.state = VerdictState::Holds;
  if (!reason.empty()) v.reasons.push_back(std::move(reason));
  v.margin = std::move(margin);
  return v;
}

Verdict Verdict::fails(std::string reason, std::optional<PiQuantity> margin) {
  Verdict v;
  v.state = VerdictState::Fails;
  v.reasons.push_back(std::move(reason));
  v.margin = std::move(margin);
  return v;
}

Verdict Verdict::undetermined(std::string reason) {
  Verdict v;
  v.state = VerdictState::Undetermined;
  v.reasons.push_back(std::move(reason));
  return v;
}

Verdict& Verdict::also(std::string reason) {
  reasons.push_back(std::move(reason));
  return *this;
}

Pi1Tag Pi1Tag::free_abelian(std::int64_t rank) {
  if (rank < 1) throw InvalidParameters("free abelian rank must be >= 1");
  Pi1Tag t;
  t.kind = Kind::FreeAbelian;
  t.rank = rank;
  return t;
}

Pi1Tag Pi1Tag::cyclic(std::int64_t p) {
  if (p < 2) throw InvalidParameters("cyclic order must be >= 2");
  Pi1Tag t;
  t.kind = Kind::Cyclic;
  t.p = p;
  return t;
}

Pi1Tag Pi1Tag::surface_product(std::int64_t g, std::int64_t h) {
  if (g < 1 || h < 1) throw InvalidParameters("surface product genera must be >= 1");
  Pi1Tag t;
  t.kind = Kind::SurfaceProduct;
  t.g = g;
  t.h = h;
  return t;
}

Pi1Tag Pi1Tag::other(std::string label) {
  Pi1Tag t;
  t.kind = Kind::Other;
  t.label = std::move(label);
  return t;
}

std::optional<std::int64_t> Pi1Tag::implied_b1() const {
  switch (kind) {
    case Kind::Trivial: return 0;
    case Kind::FreeAbelian: return rank;
    case Kind::Cyclic: return 0;
    case Kind::SurfaceProduct: return 2 * (g + h);
    case Kind::Other: return std::nullopt;
  }
  return std::nullopt;
}

Pi1Tag Pi1Tag::with_torsion(std::int64_t order) const {
  Pi1Tag t = *this;
  if (order > 1) t.torsion.push_back(order);
  return t;
}

std::string Pi1Tag::str() const {
  std::string s;
  switch (kind) {
    case Kind::Trivial: s = "1"; break;
    case Kind::FreeAbelian: s = rank == 1 ? "Z" : "Z^" + std::to_string(rank); break;
    case Kind::Cyclic: s = "Z/" + std::to_string(p); break;
    case Kind::SurfaceProduct:
      s = "pi1(S_" + std::to_string(g) + " x S_" + std::to_string(h) + ")";
      break;
    case Kind::Other: s = label; break;
  }
  for (auto t : torsion) s += " + Z/" + std::to_string(t);
  return s;
}

std::string certificate_kind_str(CertificateKind k) {
  switch (k) {
    case CertificateKind::SWOddCanonical: return "sw_odd_canonical";
    case CertificateKind::SijEven: return "sij_even";
    case CertificateKind::Symplectic: return "symplectic";
    case CertificateKind::Minimal: return "minimal";
    case CertificateKind::Irreducible: return "irreducible";
    case CertificateKind::Nonessential: return "nonessential";
    case CertificateKind::BFNonvanishing: return "bf_nonvanishing";
    case CertificateKind::NoQuasiNonsingularRicci: return "no_quasi_nonsingular_ricci";
    case CertificateKind::NegativeLambdaBar: return "negative_lambda_bar";
    case CertificateKind::NoEinstein: return "no_einstein";
    case CertificateKind::SmoothFamilyIndex: return "smooth_family_index";
  }
  return "?";
}

std::optional<CertificateKind> certificate_kind_parse(const std::string& s) {
  static const std::pair<const char*, CertificateKind> table[] = {
      {"sw_odd_canonical", CertificateKind::SWOddCanonical},
      {"sij_even", CertificateKind::SijEven},
      {"symplectic", CertificateKind::Symplectic},
      {"minimal", CertificateKind::Minimal},
      {"irreducible", CertificateKind::Irreducible},
      {"nonessential", CertificateKind::Nonessential},
      {"bf_nonvanishing", CertificateKind::BFNonvanishing},
      {"no_quasi_nonsingular_ricci", CertificateKind::NoQuasiNonsingularRicci},
      {"negative_lambda_bar", CertificateKind::NegativeLambdaBar},
      {"no_einstein", CertificateKind::NoEinstein},
      {"smooth_family_index", CertificateKind::SmoothFamilyIndex},
  };
  for (const auto& [name, kind] : table) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

std::string w2_str(W2Type w) {
  switch (w) {
    case W2Type::Spin: return "spin";
    case W2Type::NonSpin: return "nonspin";
    case W2Type::Unknown: return "unknown";
  }
  return "?";
}

bool ManifoldDescriptor::has_certificate(CertificateKind k) const {
  return find_certificate(k) != nullptr;
}

const Certificate* ManifoldDescriptor::find_certificate(CertificateKind k) const {
  for (const auto& c : certificates) {
    if (c.kind == k) return &c;
  }
  return nullptr;
}

void ManifoldDescriptor::add_certificate(Certificate c) {
  for (const auto& existing : certificates) {
    if (existing.kind == c.kind && existing.family_index == c.family_index) return;
  }
  certificates.push_back(std::move(c));
}

BettiData derive_betti(const ManifoldDescriptor& d) {
  if (!d.b1.is_known()) throw PreconditionFailed("derive_betti requires Known b1");
  const std::int64_t b1 = d.b1.value();
  if (b1 < 0) throw InconsistentDescriptor("b1 < 0");
  BettiData out;
  out.b2 = d.euler - 2 + 2 * b1;
  if (out.b2 < 0) throw InconsistentDescriptor("b2 < 0 for '" + d.name + "'");
  if ((out.b2 + d.signature) % 2 != 0) {
    throw InconsistentDescriptor("b2 + signature odd for '" + d.name + "'");
  }
  out.b_plus = (out.b2 + d.signature) / 2;
  out.b_minus = (out.b2 - d.signature) / 2;
  if (out.b_plus < 0 || out.b_minus < 0) {
    throw InconsistentDescriptor("negative b+ or b- for '" + d.name + "'");
  }
  out.c1_squared = 2 * d.euler + 3 * d.signature;
  return out;
}

Verdict validate_descriptor(const ManifoldDescriptor& d) {
  for (const auto& c : d.certificates) {
    if (c.provenance.empty()) {
      return Verdict::fails("certificate " + certificate_kind_str(c.kind) +
                            " carries empty provenance");
    }
  }
  if (d.w2 == W2Type::Spin && d.pi1.kind == Pi1Tag::Kind::Trivial &&
      ((d.signature % 16) + 16) % 16 != 0) {
    return Verdict::fails("Rokhlin: spin and simply connected but signature !== 0 (mod 16)");
  }
  if (d.simplicial_volume.is_known() && d.simplicial_volume.value() < 0) {
    return Verdict::fails("simplicial volume < 0");
  }
  if (d.simplicial_volume.is_bounded() && d.simplicial_volume.lo() < 0) {
    return Verdict::fails("simplicial volume lower bound < 0");
  }
  if (!d.entropy4.is_unknown()) {
    const Sign lo_sign = pq_sign(d.entropy4.lo());
    if (lo_sign == Sign::Negative) return Verdict::fails("entropy^4 lower bound < 0");
    if (d.entropy4.is_bounded()) {
      const Sign width = pq_sign(d.entropy4.hi() - d.entropy4.lo());
      if (width == Sign::Negative) return Verdict::fails("entropy^4 range reversed");
    }
  }
  if (d.b1.is_known()) {
    if (d.b1.value() < 0) return Verdict::fails("b1 < 0");
    if (const auto implied = d.pi1.implied_b1();
        implied.has_value() && *implied != d.b1.value()) {
      return Verdict::fails("pi1 tag implies b1 = " + std::to_string(*implied) +
                            " but b1 = " + std::to_string(d.b1.value()));
    }
    try {
      derive_betti(d);
    } catch (const InconsistentDescriptor& e) {
      return Verdict::fails(e.what());
    }
    return Verdict::holds("all descriptor invariants pass");
  }
  return Verdict::undetermined("b1 unknown: Betti consistency not checkable");
}

bool surgered_product_lineage(const ManifoldDescriptor& d) {
  if (d.trace.empty()) return false;
  const std::string& first = d.trace.front();
  const bool product_origin = first.rfind("block:surface-product", 0) == 0 ||
                              first.rfind("block:primary-kodaira", 0) == 0;
  if (!product_origin) return false;
  return std::all_of(d.trace.begin() + 1, d.trace.end(), [](const std::string& step) {
    return step.rfind("surgery:", 0) == 0;
  });
}

}  // namespace fourfold
