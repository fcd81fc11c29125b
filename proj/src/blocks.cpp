#include "fourfold/blocks.hpp"

namespace fourfold {
namespace blocks {

namespace {

constexpr const char* kTaubes =
    "Taubes: SW of the symplectic canonical class evaluates to 1";
constexpr const char* kWittenKahler =
    "Witten: Kahler surface with b+ > 1 has odd SW on the canonical class";
constexpr const char* kOddGenusSij =
    "odd-genus surface product: H^1 generators pair to Lagrangian tori, canonical class "
    "evaluates to zero on them";
constexpr const char* kSimplyConnected = "simply connected manifolds are nonessential";
constexpr const char* kProductWithSc = "product with a simply connected factor is nonessential";
constexpr const char* kKodairaSurgered =
    "surgered product manifold: one Luttinger surgery on the 4-torus";
constexpr const char* kUndoLuttinger =
    "undoing a Luttinger surgery in the telescoping-triple construction preserves the "
    "admissibility axioms";
constexpr const char* kUsher = "minimal: Usher's theorem on symplectic fiber sums";
constexpr const char* kIrreducibleViaMinimal =
    "minimal symplectic with residually finite fundamental group is irreducible";
constexpr const char* kLogFamily =
    "logarithmic transform of order 2m+1 on an elliptic fibration (Kummer surface)";

ManifoldDescriptor k3_like(const std::string& name, const std::string& trace0) {
  ManifoldDescriptor d;
  d.name = name;
  d.euler = 24;
  d.signature = -16;
  d.b1 = Knowledge<std::int64_t>::known(0);
  d.pi1 = Pi1Tag::trivial();
  d.w2 = W2Type::Spin;
  d.simplicial_volume = Knowledge<std::int64_t>::known(0);
  d.entropy4 = Knowledge<PiQuantity>::known(PiQuantity());
  d.add_certificate({CertificateKind::Nonessential, kSimplyConnected});
  d.add_certificate({CertificateKind::SWOddCanonical, kWittenKahler});
  d.trace = {trace0};
  return d;
}

ManifoldDescriptor simply_connected_base(const std::string& name, std::int64_t e, std::int64_t s,
                                         W2Type w2, const std::string& trace0) {
  ManifoldDescriptor d;
  d.name = name;
  d.euler = e;
  d.signature = s;
  d.b1 = Knowledge<std::int64_t>::known(0);
  d.pi1 = Pi1Tag::trivial();
  d.w2 = w2;
  d.simplicial_volume = Knowledge<std::int64_t>::known(0);
  d.entropy4 = Knowledge<PiQuantity>::known(PiQuantity());
  d.add_certificate({CertificateKind::Nonessential, kSimplyConnected});
  d.trace = {trace0};
  return d;
}

ManifoldDescriptor make(const SurfaceProduct& k) {
  if (k.g < 1 || k.h < 1) throw InvalidParameters("surface product needs g, h >= 1");
  const std::int64_t gg = k.g - 1, hh = k.h - 1;
  ManifoldDescriptor d;
  d.name = "Sigma" + std::to_string(k.g) + "xSigma" + std::to_string(k.h);
  d.euler = 4 * gg * hh;
  d.signature = 0;
  d.b1 = Knowledge<std::int64_t>::known(2 * (k.g + k.h));
  d.pi1 = Pi1Tag::surface_product(k.g, k.h);
  d.w2 = W2Type::Spin;  // even intersection form: the canonical class is even
  d.simplicial_volume = Knowledge<std::int64_t>::known(24 * gg * hh);
  d.entropy4 = Knowledge<PiQuantity>::bounded(
      PiQuantity::rational(Rational(16 * gg * hh)),
      PiQuantity::pi_squared(Rational(256 * gg * hh)));
  d.add_certificate({CertificateKind::Symplectic, "product symplectic form"});
  d.add_certificate({CertificateKind::SWOddCanonical, kTaubes});
  if (k.g % 2 == 1 && k.h % 2 == 1) {
    d.add_certificate({CertificateKind::SijEven, kOddGenusSij});
  }
  d.trace = {"block:surface-product g=" + std::to_string(k.g) + " h=" + std::to_string(k.h)};
  return d;
}

ManifoldDescriptor make(const K3&) { return k3_like("K3", "block:k3"); }

ManifoldDescriptor make(const HomotopyK3& k) {
  if (k.m < 0) throw InvalidParameters("homotopy K3 family index must be >= 0");
  ManifoldDescriptor d =
      k3_like("HomotopyK3(" + std::to_string(k.m) + ")", "block:homotopy-k3 m=" + std::to_string(k.m));
  d.add_certificate({CertificateKind::SmoothFamilyIndex, kLogFamily, k.m});
  return d;
}

ManifoldDescriptor make(const CP2&) {
  return simply_connected_base("CP2", 3, 1, W2Type::NonSpin, "block:cp2");
}

ManifoldDescriptor make(const CP2Bar&) {
  return simply_connected_base("CP2bar", 3, -1, W2Type::NonSpin, "block:cp2bar");
}

ManifoldDescriptor make(const S1xS3&) {
  ManifoldDescriptor d;
  d.name = "S1xS3";
  d.euler = 0;
  d.signature = 0;
  d.b1 = Knowledge<std::int64_t>::known(1);
  d.pi1 = Pi1Tag::free_abelian(1);
  d.w2 = W2Type::Spin;
  d.simplicial_volume = Knowledge<std::int64_t>::known(0);
  d.entropy4 = Knowledge<PiQuantity>::known(PiQuantity());
  d.add_certificate({CertificateKind::Nonessential, kProductWithSc});
  d.trace = {"block:s1xs3"};
  return d;
}

ManifoldDescriptor make(const Yp& k) {
  if (k.p < 2) throw InvalidParameters("Y_p needs p >= 2");
  ManifoldDescriptor d;
  d.name = "Y" + std::to_string(k.p);
  d.euler = 2;
  d.signature = 0;
  d.b1 = Knowledge<std::int64_t>::known(0);
  d.pi1 = Pi1Tag::cyclic(k.p);
  d.w2 = W2Type::Unknown;
  // ||Y_p|| is never stated; the off-by-default amenable rule may upgrade it.
  d.trace = {"block:yp p=" + std::to_string(k.p)};
  return d;
}

ManifoldDescriptor make(const PrimaryKodaira&) {
  ManifoldDescriptor d;
  d.name = "PrimaryKodaira";
  d.euler = 0;
  d.signature = 0;
  d.b1 = Knowledge<std::int64_t>::known(3);
  d.pi1 = Pi1Tag::other("nilpotent");
  d.w2 = W2Type::Unknown;
  d.add_certificate({CertificateKind::Symplectic, "Lagrangian torus bundle over the torus"});
  d.add_certificate({CertificateKind::SWOddCanonical, kTaubes});
  d.add_certificate({CertificateKind::SijEven, kKodairaSurgered});
  d.trace = {"block:primary-kodaira"};
  return d;
}

ManifoldDescriptor make(const Gompf& k) {
  if (k.alpha < 2 || k.beta < 0) throw InvalidParameters("Gompf block needs alpha >= 2, beta >= 0");
  ManifoldDescriptor d = simply_connected_base(
      "Gompf(" + std::to_string(k.alpha) + "," + std::to_string(k.beta) + ")",
      24 * k.alpha + 4 * k.beta, -16 * k.alpha, W2Type::Spin,
      "block:gompf alpha=" + std::to_string(k.alpha) + " beta=" + std::to_string(k.beta));
  d.add_certificate({CertificateKind::SWOddCanonical, kTaubes});
  return d;
}

ManifoldDescriptor make(const MinimalSc& k) {
  if (2 * k.a + 3 * k.b < 0) throw InvalidParameters("minimal-sc needs 2a + 3b >= 0");
  if (((k.a + k.b) % 4 + 4) % 4 != 0) throw InvalidParameters("minimal-sc needs a + b == 0 (mod 4)");
  if (k.b > -2) throw InvalidParameters("minimal-sc needs b <= -2");
  ManifoldDescriptor d = simply_connected_base(
      "MinimalSc(" + std::to_string(k.a) + "," + std::to_string(k.b) + ")", k.a, k.b,
      W2Type::NonSpin, "block:minimal-sc a=" + std::to_string(k.a) + " b=" + std::to_string(k.b));
  d.add_certificate({CertificateKind::Symplectic, "symplectic fiber-sum construction"});
  d.add_certificate({CertificateKind::Minimal, kUsher});
  return d;
}

void check_lattice_family_params(std::int64_t a, std::int64_t b) {
  if (2 * a + 3 * b < 0) throw InvalidParameters("lattice family needs 2a + 3b >= 0");
  if (((a + b) % 8 + 8) % 8 != 0) throw InvalidParameters("lattice family needs a + b == 0 (mod 8)");
  if (b >= -1) throw InvalidParameters("lattice family needs b < -1");
}

void add_lattice_family_certificates(ManifoldDescriptor& d) {
  d.add_certificate({CertificateKind::Symplectic, "Luttinger surgery construction"});
  d.add_certificate({CertificateKind::Minimal, kUsher});
  d.add_certificate({CertificateKind::Irreducible, kIrreducibleViaMinimal});
  d.add_certificate({CertificateKind::SWOddCanonical, kTaubes});
  d.add_certificate({CertificateKind::SijEven, kUndoLuttinger});
}

ManifoldDescriptor make(const IrreducibleZ& k) {
  check_lattice_family_params(k.a, k.b);
  ManifoldDescriptor d;
  d.name = "Z(" + std::to_string(k.a) + "," + std::to_string(k.b) + ")";
  d.euler = k.a;
  d.signature = k.b;
  d.b1 = Knowledge<std::int64_t>::known(1);
  d.pi1 = Pi1Tag::free_abelian(1);
  d.w2 = W2Type::NonSpin;
  add_lattice_family_certificates(d);
  d.trace = {"block:irreducible-z a=" + std::to_string(k.a) + " b=" + std::to_string(k.b)};
  return d;
}

ManifoldDescriptor make(const IrreducibleZp& k) {
  check_lattice_family_params(k.a, k.b);
  if (k.p < 3 || k.p % 2 == 0) throw InvalidParameters("lattice family Z/p needs odd p >= 3");
  ManifoldDescriptor d;
  d.name = "Zp(" + std::to_string(k.a) + "," + std::to_string(k.b) + ";" + std::to_string(k.p) + ")";
  d.euler = k.a;
  d.signature = k.b;
  d.b1 = Knowledge<std::int64_t>::known(0);
  d.pi1 = Pi1Tag::cyclic(k.p);
  d.w2 = W2Type::NonSpin;
  add_lattice_family_certificates(d);
  d.trace = {"block:irreducible-zp a=" + std::to_string(k.a) + " b=" + std::to_string(k.b) +
             " p=" + std::to_string(k.p)};
  return d;
}

}  // namespace

ManifoldDescriptor make_block(const BlockKind& kind) {
  return std::visit([](const auto& k) { return make(k); }, kind);
}

std::vector<std::string> block_usage() {
  return {
      "surface-product g h", "k3",          "homotopy-k3 m",  "cp2",
      "cp2bar",              "s1xs3",       "yp p",           "primary-kodaira",
      "gompf alpha beta",    "minimal-sc a b", "irreducible-z a b", "irreducible-zp a b p",
  };
}

BlockKind parse_block(const std::string& name, const std::vector<std::int64_t>& params) {
  const auto need = [&](size_t n) {
    if (params.size() != n) {
      throw InvalidParameters("block '" + name + "' takes " + std::to_string(n) + " parameter(s)");
    }
  };
  if (name == "surface-product") { need(2); return SurfaceProduct{params[0], params[1]}; }
  if (name == "k3") { need(0); return K3{}; }
  if (name == "homotopy-k3") { need(1); return HomotopyK3{params[0]}; }
  if (name == "cp2") { need(0); return CP2{}; }
  if (name == "cp2bar") { need(0); return CP2Bar{}; }
  if (name == "s1xs3") { need(0); return S1xS3{}; }
  if (name == "yp") { need(1); return Yp{params[0]}; }
  if (name == "primary-kodaira") { need(0); return PrimaryKodaira{}; }
  if (name == "gompf") { need(2); return Gompf{params[0], params[1]}; }
  if (name == "minimal-sc") { need(2); return MinimalSc{params[0], params[1]}; }
  if (name == "irreducible-z") { need(2); return IrreducibleZ{params[0], params[1]}; }
  if (name == "irreducible-zp") { need(3); return IrreducibleZp{params[0], params[1], params[2]}; }
  throw InvalidParameters("unknown block kind '" + name + "'");
}

ManifoldDescriptor apply_amenable_volume_rule(ManifoldDescriptor d) {
  const bool amenable_tag = d.pi1.kind == Pi1Tag::Kind::Trivial ||
                            d.pi1.kind == Pi1Tag::Kind::FreeAbelian ||
                            d.pi1.kind == Pi1Tag::Kind::Cyclic;
  if (amenable_tag && d.simplicial_volume.is_unknown()) {
    d.simplicial_volume = Knowledge<std::int64_t>::known(0);
  }
  return d;
}

}  // namespace blocks
}  // namespace fourfold
