#include "fourfold/geography.hpp"

#include <array>
#include <cstdlib>

#include "fourfold/admissibility.hpp"
#include "fourfold/blocks.hpp"
#include "fourfold/surgery.hpp"

namespace fourfold {

namespace {

constexpr std::array<std::pair<std::int64_t, std::int64_t>, 4> kExceptional = {
    {{7, -3}, {11, -3}, {13, -5}, {15, -7}}};

constexpr const char* kExceptionalNote =
    "realized separately via the minimal symplectic CP2 # 2 CP2bar of Akhmedov-Park";

bool exceptional_point(std::int64_t a, std::int64_t b) {
  for (const auto& [ea, eb] : kExceptional) {
    if (a == ea && b == eb) return true;
  }
  return false;
}

}  // namespace

std::string GeographyStatus::str() const {
  switch (kind) {
    case Kind::Realized: return "realized";
    case Kind::ExceptionalResolved: return "exceptional";
    case Kind::OutsideRegion: return "outside:" + detail;
  }
  return "?";
}

GeographyStatus geography_status(std::int64_t a, std::int64_t b) {
  if (2 * a + 3 * b < 0) return {GeographyStatus::Kind::OutsideRegion, "2a+3b < 0"};
  if (((a + b) % 4 + 4) % 4 != 0) return {GeographyStatus::Kind::OutsideRegion, "a+b !== 0 (mod 4)"};
  if (b > -2) return {GeographyStatus::Kind::OutsideRegion, "b > -2"};
  if (exceptional_point(a, b)) return {GeographyStatus::Kind::ExceptionalResolved, kExceptionalNote};
  return {GeographyStatus::Kind::Realized, ""};
}

ManifoldDescriptor HomeoModel::realize() const {
  std::vector<ManifoldDescriptor> parts;
  for (std::int64_t i = 0; i < cp2; ++i) parts.push_back(blocks::make_block(blocks::CP2{}));
  for (std::int64_t i = 0; i < cp2bar; ++i) parts.push_back(blocks::make_block(blocks::CP2Bar{}));
  switch (extra) {
    case Extra::None: break;
    case Extra::S1xS3: parts.push_back(blocks::make_block(blocks::S1xS3{})); break;
    case Extra::Yp: parts.push_back(blocks::make_block(blocks::Yp{p})); break;
  }
  if (parts.empty()) {
    ManifoldDescriptor s4;
    s4.name = "S4";
    s4.euler = 2;
    s4.signature = 0;
    s4.b1 = Knowledge<std::int64_t>::known(0);
    s4.w2 = W2Type::Spin;
    s4.simplicial_volume = Knowledge<std::int64_t>::known(0);
    s4.entropy4 = Knowledge<PiQuantity>::known(PiQuantity());
    s4.add_certificate(
        {CertificateKind::Nonessential, "simply connected manifolds are nonessential"});
    s4.trace = {"block:s4"};
    return s4;
  }
  return connected_sum(parts);
}

std::string HomeoModel::str() const {
  std::string s =
      std::to_string(cp2) + " CP2 # " + std::to_string(cp2bar) + " CP2bar";
  switch (extra) {
    case Extra::None: break;
    case Extra::S1xS3: s += " # S1xS3"; break;
    case Extra::Yp: s += " # Y" + std::to_string(p); break;
  }
  return s;
}

LatticeBuild build_lattice_family(std::int64_t a, std::int64_t b,
                                  std::optional<std::int64_t> p) {
  if (2 * a + 3 * b < 0 || ((a + b) % 8 + 8) % 8 != 0 || b >= -1) {
    throw InvalidLatticePoint("lattice family needs 2a+3b >= 0, a+b == 0 (mod 8), b < -1");
  }
  const std::int64_t alpha = (a + b) / 2;
  const std::int64_t beta = (a - b) / 2;
  LatticeBuild out;
  if (!p) {
    out.manifold = blocks::make_block(blocks::IrreducibleZ{a, b});
    out.model = HomeoModel{alpha, beta, HomeoModel::Extra::S1xS3, 0};
  } else {
    if (*p < 3 || *p % 2 == 0) throw InvalidLatticePoint("cyclic variant needs odd p >= 3");
    out.manifold = blocks::make_block(blocks::IrreducibleZp{a, b, *p});
    out.model = HomeoModel{alpha - 1, beta - 1, HomeoModel::Extra::Yp, *p};
  }
  return out;
}

std::optional<HomeoModel> classify_homeo(const ManifoldDescriptor& d) {
  if (d.w2 != W2Type::NonSpin) return std::nullopt;
  if (!d.b1.is_known()) return std::nullopt;
  if (!d.pi1.torsion.empty()) return std::nullopt;
  BettiData betti;
  try {
    betti = derive_betti(d);
  } catch (const Error&) {
    return std::nullopt;
  }

  switch (d.pi1.kind) {
    case Pi1Tag::Kind::Trivial:
      return HomeoModel{betti.b_plus, betti.b_minus, HomeoModel::Extra::None, 0};
    case Pi1Tag::Kind::FreeAbelian: {
      if (d.pi1.rank != 1) return std::nullopt;
      if (betti.b2 - std::abs(d.signature) < 6) return std::nullopt;
      return HomeoModel{betti.b_plus, betti.b_minus, HomeoModel::Extra::S1xS3, 0};
    }
    case Pi1Tag::Kind::Cyclic: {
      if (d.pi1.p % 2 == 0) return std::nullopt;
      return HomeoModel{betti.b_plus, betti.b_minus, HomeoModel::Extra::Yp, d.pi1.p};
    }
    default:
      return std::nullopt;
  }
}

std::vector<ScanRow> geography_scan(std::int64_t a_lo, std::int64_t a_hi, std::int64_t b_lo,
                                    std::int64_t b_hi, bool mod8_only) {
  if (a_lo > a_hi || b_lo > b_hi) throw InvalidParameters("empty scan range");
  std::vector<ScanRow> rows;
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    for (std::int64_t b = b_lo; b <= b_hi; ++b) {
      const bool mod8 = ((a + b) % 8 + 8) % 8 == 0;
      if (mod8_only && !mod8) continue;
      ScanRow row;
      row.a = a;
      row.b = b;
      row.status = geography_status(a, b);
      row.mod8 = mod8;
      if ((a + b) % 2 == 0) {
        row.alpha = (a + b) / 2;
        row.beta = (a - b) / 2;
      }
      if (2 * a + 3 * b >= 0 && mod8 && b < -1) {
        const LatticeBuild built = build_lattice_family(a, b);
        row.bf_verdict = verdict_state_str(check_bf(built.manifold).overall.state);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace fourfold
