#include "fourfold/obstructions.hpp"

#include <cstdlib>

#include "fourfold/admissibility.hpp"
#include "fourfold/surgery.hpp"

namespace fourfold {

namespace {

constexpr const char* kRicciObstruction =
    "normalized Ricci flow obstruction: 4n - (2e(N)+3sign(N)) exceeds (1/3) sum c1^2";

const Rational kTwoThirds(2, 3);

// Shared precondition gate of the curvature statements.
Rational admissible_c1sq_sum(const std::vector<ManifoldDescriptor>& summands,
                             const ManifoldDescriptor& N) {
  if (summands.size() < 2 || summands.size() > 3) {
    throw PreconditionFailed("need 2 or 3 admissible summands");
  }
  for (const auto& s : summands) {
    if (!check_bf(s).overall.is_holds()) {
      throw PreconditionFailed("summand '" + s.name + "' is not certified BF-admissible");
    }
  }
  if (derive_betti(N).b_plus != 0) {
    throw PreconditionFailed("remainder '" + N.name + "' must have b+ = 0");
  }
  std::int64_t sum = 0;
  for (const auto& s : summands) sum += derive_betti(s).c1_squared;
  if (sum < 0) throw PreconditionFailed("sum of c1^2 is negative");
  return Rational(sum);
}

// Verdict for LHS vs RHS-interval [rlo, rhi]: Holds when LHS clears the
// upper end, Fails when it cannot clear the lower end, else Undetermined.
Verdict interval_verdict(const PiQuantity& lhs, const PiQuantity& rlo, const PiQuantity& rhi,
                         bool strict, const PiSquareInterval& pi2) {
  const PiQuantity upper_margin = lhs - rhi;
  const PiQuantity lower_margin = lhs - rlo;
  const Sign up = pq_sign(upper_margin, pi2);
  const Sign low = pq_sign(lower_margin, pi2);
  if (up == Sign::Undecidable || low == Sign::Undecidable) {
    return Verdict::undetermined("pi^2 bracket too wide to decide; refine and retry");
  }
  const bool holds = strict ? up == Sign::Positive : up != Sign::Negative;
  if (holds) return Verdict::holds("", upper_margin);
  const bool fails = strict ? low != Sign::Positive : low == Sign::Negative;
  if (fails) return Verdict::fails("inequality fails against the lower end", lower_margin);
  Verdict v = Verdict::undetermined("characteristic side lies inside the invariant's bracket");
  v.margin = upper_margin;
  return v;
}

Verdict volume_quotient_verdict(const ManifoldDescriptor& d, std::int64_t lhs_int,
                                std::int64_t constant, bool strict,
                                const PiSquareInterval& pi2) {
  if (d.simplicial_volume.is_unknown()) {
    return Verdict::undetermined("simplicial volume unknown");
  }
  const PiQuantity lhs = PiQuantity::rational(Rational(lhs_int));
  const auto quotient = [&](std::int64_t v) {
    return PiQuantity::inv_pi_squared(Rational(v, constant));
  };
  return interval_verdict(lhs, quotient(d.simplicial_volume.lo()),
                          quotient(d.simplicial_volume.hi()), strict, pi2);
}

bool zero_canonical_class(const ManifoldDescriptor& d) {
  return d.origin() == "block:k3" || d.origin() == "block:homotopy-k3 m=0";
}

Verdict require_certificate(const ManifoldDescriptor& d, CertificateKind kind) {
  if (const Certificate* c = d.find_certificate(kind)) {
    return Verdict::holds(certificate_kind_str(kind) + ": " + c->provenance);
  }
  return Verdict::undetermined("missing certificate " + certificate_kind_str(kind));
}

Verdict combine(std::initializer_list<const Verdict*> parts) {
  Verdict out;
  bool any_fails = false, all_hold = true;
  for (const Verdict* v : parts) {
    any_fails |= v->is_fails();
    all_hold &= v->is_holds();
    for (const auto& r : v->reasons) out.reasons.push_back(r);
  }
  out.state = any_fails ? VerdictState::Fails
                        : (all_hold ? VerdictState::Holds : VerdictState::Undetermined);
  return out;
}

}  // namespace

std::string property_kind_str(PropertyKind k) {
  switch (k) {
    case PropertyKind::R: return "R";
    case PropertyKind::E: return "E";
    case PropertyKind::Mu: return "mu";
  }
  return "?";
}

RadicalBound CurvatureBounds::lambda_k_upper(const Rational& k) const {
  if (k < kTwoThirds) {
    throw PreconditionFailed("lambda_k bound needs k >= 2/3 (= (n-2)/(n-1), n = 4)");
  }
  RadicalBound b = yamabe_upper;
  b.coefficient *= k;
  return b;
}

CurvatureBounds curvature_bounds(const std::vector<ManifoldDescriptor>& summands,
                                 const ManifoldDescriptor& N) {
  CurvatureBounds out;
  out.c1sq_sum = admissible_c1sq_sum(summands, N);
  out.scalar_l2 = PiQuantity::pi_squared(Rational(32) * out.c1sq_sum);
  out.weyl_mixed = PiQuantity::pi_squared(Rational(72) * out.c1sq_sum);
  out.yamabe_upper = RadicalBound{Rational(-4), 1, 2 * out.c1sq_sum.num()};
  return out;
}

LambdaK lambda_k_from_yamabe(const Rational& k, const Rational& yamabe) {
  if (yamabe.sign() <= 0 && k >= kTwoThirds) return LambdaK::of(k * yamabe);
  if (yamabe.sign() > 0 && k.sign() > 0) return LambdaK::plus_infinity();
  return LambdaK::undetermined();
}

ScalarBound min_scalar_bound(const ScalarBound& lambda_k_bar, const Rational& k,
                             const Rational& vol, int n) {
  if (k.sign() <= 0) throw PreconditionFailed("k must be positive");
  if (vol.sign() <= 0) throw PreconditionFailed("volume must be positive");
  const int lambda_sign = std::holds_alternative<Rational>(lambda_k_bar)
                              ? std::get<Rational>(lambda_k_bar).sign()
                              : std::get<RadicalBound>(lambda_k_bar).sign();
  if (lambda_sign >= 0) throw NonNegativeLambda("lambda_k bound must be negative");

  if (n == 2) {  // vol^{2/n} = vol
    if (std::holds_alternative<Rational>(lambda_k_bar)) {
      return std::get<Rational>(lambda_k_bar) / (k * vol);
    }
    RadicalBound b = std::get<RadicalBound>(lambda_k_bar);
    b.coefficient /= k * vol;
    return b;
  }
  if (n != 4) throw InvalidParameters("min_scalar_bound supports n = 2 and n = 4");

  // n = 4: divide by k sqrt(vol).
  mpz_class sn, sd;
  const bool num_square = mpz_perfect_square_p(vol.num().get_mpz_t()) != 0;
  const bool den_square = mpz_perfect_square_p(vol.den().get_mpz_t()) != 0;
  if (num_square && den_square) {
    mpz_sqrt(sn.get_mpz_t(), vol.num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), vol.den().get_mpz_t());
    const Rational root(sn, sd);
    if (std::holds_alternative<Rational>(lambda_k_bar)) {
      return std::get<Rational>(lambda_k_bar) / (k * root);
    }
    RadicalBound b = std::get<RadicalBound>(lambda_k_bar);
    b.coefficient /= k * root;
    return b;
  }
  // 1 / sqrt(a/b) = sqrt(a b) / a with vol = a/b in lowest terms.
  const mpz_class a = vol.num(), b = vol.den();
  if (std::holds_alternative<Rational>(lambda_k_bar)) {
    const Rational& r = std::get<Rational>(lambda_k_bar);
    return RadicalBound{r / (k * Rational(a)), 0, a * b};
  }
  RadicalBound rb = std::get<RadicalBound>(lambda_k_bar);
  rb.coefficient /= k * Rational(a);
  rb.radicand *= a * b;
  return rb;
}

ObstructionOutcome ricci_flow_obstruction(const std::vector<ManifoldDescriptor>& summands,
                                          const ManifoldDescriptor& N) {
  const Rational sum = admissible_c1sq_sum(summands, N);
  if (sum.sign() <= 0) throw PreconditionFailed("the obstruction assumes sum c1^2 > 0");
  const auto n = static_cast<std::int64_t>(summands.size());
  const Rational lhs = Rational(4 * n - (2 * N.euler + 3 * N.signature));
  const Rational margin_r = lhs - sum / Rational(3);
  const PiQuantity margin = PiQuantity::rational(margin_r);

  ObstructionOutcome out;
  std::vector<ManifoldDescriptor> parts = summands;
  parts.push_back(N);
  out.obstructed_sum = connected_sum(parts);
  if (margin_r.sign() > 0) {
    out.verdict = Verdict::holds("no quasi-non-singular normalized Ricci flow solution", margin);
    out.obstructed_sum.add_certificate({CertificateKind::NoQuasiNonsingularRicci, kRicciObstruction});
  } else {
    out.verdict =
        Verdict::fails("threshold not met: the obstruction does not apply", margin);
  }
  return out;
}

HTReport ht_report(const ManifoldDescriptor& d, bool strict, const PiSquareInterval& pi2) {
  HTReport out;
  std::int64_t lhs_int = 0;
  {
    const Verdict valid = validate_descriptor(d);
    if (valid.is_fails()) {
      const Verdict v = Verdict::undetermined("invalid descriptor: " + valid.reasons.front());
      out.classic = out.gromov_1295 = out.gromov_81 = out.entropy_54 = v;
      return out;
    }
  }
  lhs_int = 2 * d.euler - 3 * std::abs(d.signature);
  const PiQuantity lhs = PiQuantity::rational(Rational(lhs_int));

  out.classic = (strict ? lhs_int > 0 : lhs_int >= 0)
                    ? Verdict::holds("", lhs)
                    : Verdict::fails("2e - 3|sigma| below zero", lhs);
  out.gromov_1295 = volume_quotient_verdict(d, lhs_int, 1295, strict, pi2);
  out.gromov_81 = volume_quotient_verdict(d, lhs_int, 81, strict, pi2);

  if (d.entropy4.is_unknown()) {
    out.entropy_54 = Verdict::undetermined("volume entropy unknown");
  } else {
    const auto lo54 = d.entropy4.lo().divided_by_pi_squared();
    const auto hi54 = d.entropy4.hi().divided_by_pi_squared();
    if (!lo54 || !hi54) {
      out.entropy_54 = Verdict::undetermined(
          "entropy bound carries a 1/pi^2 term; the quotient leaves the coefficient ring");
    } else {
      out.entropy_54 = interval_verdict(lhs, *lo54 * Rational(1, 54), *hi54 * Rational(1, 54),
                                        strict, pi2);
    }
  }
  return out;
}

Verdict property_check(const ManifoldDescriptor& d, PropertyKind kind,
                       const PiSquareInterval& pi2) {
  const HTReport ht = ht_report(d, /*strict=*/true, pi2);

  Verdict invariant_nonzero;
  if (kind == PropertyKind::Mu) {
    if (d.entropy4.is_unknown()) {
      invariant_nonzero = Verdict::undetermined("volume entropy unknown");
    } else {
      const Sign lo = pq_sign(d.entropy4.lo(), pi2);
      if (lo == Sign::Positive) {
        invariant_nonzero = Verdict::holds("mu^4 > 0");
      } else if (d.entropy4.is_known()) {
        invariant_nonzero = Verdict::fails("volume entropy vanishes");
      } else {
        invariant_nonzero = Verdict::undetermined("mu^4 bracket does not exclude 0");
      }
    }
  } else {
    if (d.simplicial_volume.is_known()) {
      invariant_nonzero = d.simplicial_volume.value() > 0
                              ? Verdict::holds("||X|| > 0")
                              : Verdict::fails("simplicial volume vanishes");
    } else if (d.simplicial_volume.is_bounded()) {
      invariant_nonzero = Verdict::undetermined("simplicial volume only bounded, not known");
    } else {
      invariant_nonzero = Verdict::undetermined("simplicial volume unknown");
    }
  }

  switch (kind) {
    case PropertyKind::R: {
      const Verdict lambda = require_certificate(d, CertificateKind::NegativeLambdaBar);
      const Verdict ricci = require_certificate(d, CertificateKind::NoQuasiNonsingularRicci);
      Verdict out = combine({&invariant_nonzero, &ht.gromov_1295, &lambda, &ricci});
      out.margin = ht.gromov_1295.margin;
      return out;
    }
    case PropertyKind::E: {
      const Verdict einstein = require_certificate(d, CertificateKind::NoEinstein);
      Verdict out = combine({&invariant_nonzero, &ht.gromov_81, &einstein});
      out.margin = ht.gromov_81.margin;
      return out;
    }
    case PropertyKind::Mu: {
      const Verdict lambda = require_certificate(d, CertificateKind::NegativeLambdaBar);
      const Verdict ricci = require_certificate(d, CertificateKind::NoQuasiNonsingularRicci);
      Verdict out = combine({&invariant_nonzero, &ht.entropy_54, &lambda, &ricci});
      out.margin = ht.entropy_54.margin;
      return out;
    }
  }
  throw InvalidParameters("unknown property kind");
}

MonopoleFamily monopole_family(const ManifoldDescriptor& x, const ManifoldDescriptor& ym,
                               const ManifoldDescriptor& N) {
  if (!ym.has_certificate(CertificateKind::SmoothFamilyIndex)) {
    throw PreconditionFailed("'" + ym.name + "' is not a homotopy K3 family member");
  }
  const BettiData nb = derive_betti(N);
  if (nb.b_plus != 0) throw PreconditionFailed("remainder must have b+ = 0");

  MonopoleFamily out;
  mpz_ui_pow_ui(out.formal_count.get_mpz_t(), 2, static_cast<unsigned long>(2 + nb.b2));
  int zero_classes = (zero_canonical_class(x) ? 1 : 0) + (zero_canonical_class(ym) ? 1 : 0);
  out.distinct_count = out.formal_count >> zero_classes;

  if (nb.b2 <= 12) {
    const auto total = out.formal_count.get_ui();
    out.classes.reserve(total);
    for (unsigned long bits = 0; bits < total; ++bits) {
      FormalClass c;
      c.sign_x = (bits & 1) ? -1 : 1;
      c.sign_y = (bits & 2) ? -1 : 1;
      for (std::int64_t i = 0; i < nb.b2; ++i) {
        c.exceptional_signs.push_back((bits >> (2 + i)) & 1 ? -1 : 1);
      }
      out.classes.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace fourfold
