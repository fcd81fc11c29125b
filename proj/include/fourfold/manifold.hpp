#ifndef FOURFOLD_MANIFOLD_HPP
#define FOURFOLD_MANIFOLD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourfold/errors.hpp"
#include "fourfold/pi_arith.hpp"
#include "fourfold/verdict.hpp"

namespace fourfold {

/// Invariants like the simplicial volume are only sometimes known; this is
/// the tri-state wrapper used for them throughout the descriptor model.
template <typename T>
class Knowledge {
 public:
  Knowledge() = default;

  static Knowledge known(T v) {
    Knowledge k;
    k.state_ = State::Known;
    k.lo_ = v;
    k.hi_ = std::move(v);
    return k;
  }
  static Knowledge bounded(T lo, T hi) {
    if constexpr (requires(const T& a, const T& b) { a <= b; }) {
      if (!(lo <= hi)) throw InvalidParameters("bounded range reversed");
    }
    if constexpr (requires(const T& a, const T& b) { a == b; }) {
      if (lo == hi) return known(std::move(lo));
    }
    Knowledge k;
    k.state_ = State::Bounded;
    k.lo_ = std::move(lo);
    k.hi_ = std::move(hi);
    return k;
  }
  static Knowledge unknown() { return Knowledge(); }

  bool is_known() const { return state_ == State::Known; }
  bool is_bounded() const { return state_ == State::Bounded; }
  bool is_unknown() const { return state_ == State::Unknown; }

  const T& value() const {
    if (!is_known()) throw PreconditionFailed("value of non-Known knowledge");
    return lo_;
  }
  /// Known values behave as the degenerate interval [v, v].
  const T& lo() const {
    if (is_unknown()) throw PreconditionFailed("bounds of Unknown knowledge");
    return lo_;
  }
  const T& hi() const {
    if (is_unknown()) throw PreconditionFailed("bounds of Unknown knowledge");
    return hi_;
  }

  friend bool operator==(const Knowledge& a, const Knowledge& b) {
    if (a.state_ != b.state_) return false;
    if (a.state_ == State::Unknown) return true;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  enum class State { Known, Bounded, Unknown };
  State state_ = State::Unknown;
  T lo_{};
  T hi_{};
};

/// Fundamental-group bookkeeping at the H1 level. The optional torsion list
/// records Z/p factors introduced by torus surgeries; it never contributes
/// to b1.
struct Pi1Tag {
  enum class Kind { Trivial, FreeAbelian, Cyclic, SurfaceProduct, Other };

  Kind kind = Kind::Trivial;
  std::int64_t rank = 0;   // FreeAbelian
  std::int64_t p = 0;      // Cyclic, p >= 2
  std::int64_t g = 0, h = 0;  // SurfaceProduct
  std::string label;       // Other
  std::vector<std::int64_t> torsion;

  static Pi1Tag trivial() { return {}; }
  static Pi1Tag free_abelian(std::int64_t rank);
  static Pi1Tag cyclic(std::int64_t p);
  static Pi1Tag surface_product(std::int64_t g, std::int64_t h);
  static Pi1Tag other(std::string label);

  /// b1 forced by the tag, when it forces one (Other never does).
  std::optional<std::int64_t> implied_b1() const;
  Pi1Tag with_torsion(std::int64_t p) const;
  std::string str() const;

  friend bool operator==(const Pi1Tag&, const Pi1Tag&) = default;
};

/// Provenance-carrying facts that are not computable from homology.
enum class CertificateKind {
  SWOddCanonical,
  SijEven,
  Symplectic,
  Minimal,
  Irreducible,
  Nonessential,
  BFNonvanishing,
  NoQuasiNonsingularRicci,
  NegativeLambdaBar,
  NoEinstein,
  SmoothFamilyIndex,
};

std::string certificate_kind_str(CertificateKind k);
std::optional<CertificateKind> certificate_kind_parse(const std::string& s);

struct Certificate {
  CertificateKind kind;
  std::string provenance;          // non-empty
  std::int64_t family_index = 0;   // SmoothFamilyIndex only

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class W2Type { Spin, NonSpin, Unknown };

std::string w2_str(W2Type w);

/// The central value of the library: integer characteristic numbers plus
/// knowledge-lattice invariants, certificates and the construction trace of
/// a closed oriented smooth 4-manifold.
struct ManifoldDescriptor {
  std::string name;
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  Knowledge<std::int64_t> b1 = Knowledge<std::int64_t>::unknown();
  Pi1Tag pi1;
  W2Type w2 = W2Type::Unknown;
  /// Gromov simplicial volume ||X||; an integer for every catalog-reachable
  /// manifold. Division by 1295 pi^2 etc. happens at comparison time.
  Knowledge<std::int64_t> simplicial_volume = Knowledge<std::int64_t>::unknown();
  /// Bounds on the fourth power of the volume entropy mu(X).
  Knowledge<PiQuantity> entropy4 = Knowledge<PiQuantity>::unknown();
  std::vector<Certificate> certificates;
  std::vector<std::string> trace;

  bool has_certificate(CertificateKind k) const;
  const Certificate* find_certificate(CertificateKind k) const;
  /// Appends unless a certificate of the same kind (and index) is present.
  void add_certificate(Certificate c);
  bool nonessential() const { return has_certificate(CertificateKind::Nonessential); }

  /// First trace entry, or "" for hand-built descriptors.
  std::string origin() const { return trace.empty() ? std::string() : trace.front(); }
};

/// b2 and the derived intersection-form data. b+/b- are never stored; they
/// are determined by (e, sigma, b1).
struct BettiData {
  std::int64_t b2 = 0;
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;
  std::int64_t c1_squared = 0;  // 2e + 3 sigma
};

/// Requires b1 Known. Throws InconsistentDescriptor when b2 < 0, the parity
/// of b2 + sigma fails, or a derived b+/- would be negative.
BettiData derive_betti(const ManifoldDescriptor& d);

/// Full invariant audit. Holds iff all type invariants pass, Fails carries
/// the first violated one, Undetermined when an Unknown b1 blocks the checks.
Verdict validate_descriptor(const ManifoldDescriptor& d);

/// True when the trace shows a (possibly trivial) chain of torus surgeries
/// on a surface-product block. Certificate propagation for the third
/// BF axiom is restricted to this lineage.
bool surgered_product_lineage(const ManifoldDescriptor& d);

/// Formal monopole class sign pattern +-c1(X) +- c1(Y) + sum +-E_i.
struct FormalClass {
  int sign_x = 1;
  int sign_y = 1;
  std::vector<int> exceptional_signs;
};

}  // namespace fourfold

#endif
