#ifndef FOURFOLD_GEOGRAPHY_HPP
#define FOURFOLD_GEOGRAPHY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fourfold/manifold.hpp"

namespace fourfold {

/// Membership of a lattice point (a, b) = (e, sigma) in the region populated
/// by minimal simply connected symplectic manifolds with odd intersection
/// form: 2a + 3b >= 0, a + b == 0 (mod 4), b <= -2, with four low-lying
/// points that needed a separate construction and are kept as data.
struct GeographyStatus {
  enum class Kind { Realized, ExceptionalResolved, OutsideRegion };
  Kind kind = Kind::OutsideRegion;
  std::string detail;  // first failing condition, or the resolution note

  std::string str() const;
};

GeographyStatus geography_status(std::int64_t a, std::int64_t b);

/// Standard piece count of a homeomorphism model
/// alpha CP2 # beta CP2bar [# S1xS3 | # Y_p].
struct HomeoModel {
  enum class Extra { None, S1xS3, Yp };

  std::int64_t cp2 = 0;
  std::int64_t cp2bar = 0;
  Extra extra = Extra::None;
  std::int64_t p = 0;  // Yp only

  /// Connected sum of the standard pieces.
  ManifoldDescriptor realize() const;
  std::string str() const;

  friend bool operator==(const HomeoModel&, const HomeoModel&) = default;
};

struct LatticeBuild {
  ManifoldDescriptor manifold;
  HomeoModel model;
};

/// The BF-admissible irreducible symplectic manifold realizing (a, b) with
/// fundamental group Z (p omitted) or Z/p (p odd), together with its
/// homeomorphism model. Requires 2a + 3b >= 0, a + b == 0 (mod 8), b < -1.
LatticeBuild build_lattice_family(std::int64_t a, std::int64_t b,
                                  std::optional<std::int64_t> p = std::nullopt);

/// Homeomorphism model from the classification arithmetic, for non-spin
/// descriptors with fundamental group trivial, Z (needs b2 - |sigma| >= 6)
/// or odd-order cyclic. std::nullopt means Undetermined: the input is
/// outside the stated hypotheses.
std::optional<HomeoModel> classify_homeo(const ManifoldDescriptor& d);

struct ScanRow {
  std::int64_t a = 0;
  std::int64_t b = 0;
  GeographyStatus status;
  bool mod8 = false;
  std::optional<std::int64_t> alpha, beta;
  std::string bf_verdict;  // of the lattice-family manifold, when defined
};

std::vector<ScanRow> geography_scan(std::int64_t a_lo, std::int64_t a_hi, std::int64_t b_lo,
                                    std::int64_t b_hi, bool mod8_only);

}  // namespace fourfold

#endif
