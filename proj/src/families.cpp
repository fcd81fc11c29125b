#include "fourfold/families.hpp"

#include <algorithm>

#include "fourfold/admissibility.hpp"
#include "fourfold/blocks.hpp"
#include "fourfold/surgery.hpp"

namespace fourfold {

namespace {

constexpr const char* kNegativeLambda =
    "lambda_k(M) <= -4 k pi sqrt(2 c) < 0 from the scalar curvature L2 bound of the "
    "admissible pieces";
constexpr const char* kRicciFromBand =
    "normalized Ricci flow obstruction, connected-sum specialization: 4(j+l1)+l2 clears "
    "(1/3)(sum c1^2 + 4(g-1)(h-1))";
constexpr const char* kEinsteinMode =
    "Einstein obstruction mode (81 pi^2 constant): granted by the family enumerator as a "
    "certificate source";

struct SummandData {
  std::int64_t sum_plus = 0;   // sum of 2e + 3 sigma
  std::int64_t sum_minus = 0;  // sum of 2e - 3 sigma
  std::int64_t norm = 0;       // sum of ||X_m||
  std::int64_t j = 0;
};

SummandData summand_data(const std::vector<ManifoldDescriptor>& summands, bool need_norm) {
  SummandData out;
  out.j = static_cast<std::int64_t>(summands.size());
  for (const auto& s : summands) {
    if (!check_bf(s).overall.is_holds()) {
      throw PreconditionFailed("summand '" + s.name + "' is not certified BF-admissible");
    }
    out.sum_plus += 2 * s.euler + 3 * s.signature;
    out.sum_minus += 2 * s.euler - 3 * s.signature;
    if (need_norm) {
      if (!s.simplicial_volume.is_known()) {
        throw PreconditionFailed("summand '" + s.name + "' has no known simplicial volume");
      }
      out.norm += s.simplicial_volume.value();
    }
  }
  return out;
}

bool positive(const PiQuantity& q, const PiSquareInterval& pi2) {
  return pq_sign(q, pi2) == Sign::Positive;
}

ManifoldDescriptor assemble(const std::vector<ManifoldDescriptor>& summands, std::int64_t g,
                            std::int64_t h, std::int64_t l1, std::int64_t l2) {
  std::vector<ManifoldDescriptor> parts = summands;
  parts.push_back(blocks::make_block(blocks::SurfaceProduct{g, h}));
  const ManifoldDescriptor s1xs3 = blocks::make_block(blocks::S1xS3{});
  const ManifoldDescriptor cp2bar = blocks::make_block(blocks::CP2Bar{});
  for (std::int64_t i = 0; i < l1; ++i) parts.push_back(s1xs3);
  for (std::int64_t i = 0; i < l2; ++i) parts.push_back(cp2bar);
  return connected_sum(parts);
}

bool homotopy_k3_summand(const std::vector<ManifoldDescriptor>& summands) {
  return std::any_of(summands.begin(), summands.end(), [](const ManifoldDescriptor& d) {
    return d.origin() == "block:k3" || d.origin().rfind("block:homotopy-k3", 0) == 0;
  });
}

// K3 pieces for the summand-dependent closed forms; residuals do not depend
// on the choice.
std::vector<ManifoldDescriptor> k3_summands(std::int64_t j) {
  std::vector<ManifoldDescriptor> out;
  const ManifoldDescriptor k3 = blocks::make_block(blocks::K3{});
  for (std::int64_t i = 0; i < j; ++i) out.push_back(k3);
  return out;
}

ManifoldDescriptor remainder_sum(std::int64_t l1, std::int64_t l2) {
  if (l1 + l2 == 0) {
    // empty remainder: the trivial S4 summand
    ManifoldDescriptor d;
    d.name = "S4";
    d.euler = 2;
    d.signature = 0;
    d.b1 = Knowledge<std::int64_t>::known(0);
    d.w2 = W2Type::Spin;
    d.simplicial_volume = Knowledge<std::int64_t>::known(0);
    d.entropy4 = Knowledge<PiQuantity>::known(PiQuantity());
    d.add_certificate({CertificateKind::Nonessential, "simply connected manifolds are nonessential"});
    d.trace = {"block:s4"};
    return d;
  }
  std::vector<ManifoldDescriptor> parts;
  for (std::int64_t i = 0; i < l1; ++i) parts.push_back(blocks::make_block(blocks::S1xS3{}));
  for (std::int64_t i = 0; i < l2; ++i) parts.push_back(blocks::make_block(blocks::CP2Bar{}));
  return connected_sum(parts);
}

ManifoldDescriptor lemma_sum(std::int64_t j, std::int64_t k, std::int64_t g, std::int64_t h,
                             std::int64_t l1, std::int64_t l2) {
  std::vector<ManifoldDescriptor> parts = k3_summands(j);
  const ManifoldDescriptor product = blocks::make_block(blocks::SurfaceProduct{g, h});
  for (std::int64_t i = 0; i < k; ++i) parts.push_back(product);
  for (std::int64_t i = 0; i < l1; ++i) parts.push_back(blocks::make_block(blocks::S1xS3{}));
  for (std::int64_t i = 0; i < l2; ++i) parts.push_back(blocks::make_block(blocks::CP2Bar{}));
  return connected_sum(parts);
}

using PointFn = std::map<std::string, std::int64_t>;

struct Formula {
  const char* id;
  // fills entries for one grid point
  void (*eval)(const PointFn&, ResidualEntry&);
  // which grid axes the formula ranges over
  std::vector<const char*> axes;
};

void push_point(ResidualEntry& e, const PointFn& p) { e.point = p; }

const std::vector<Formula>& formula_table() {
  static const std::vector<Formula> table = {
      {"connected-sum-norm",
       [](const PointFn& p, ResidualEntry& e) {
         const auto j = p.at("j"), k = p.at("k"), g = p.at("g"), h = p.at("h"),
                    l1 = p.at("l1"), l2 = p.at("l2");
         e.stated = Rational(24 * k * (g - 1) * (h - 1));  // + sum ||K3|| = 0
         const ManifoldDescriptor m = lemma_sum(j, k, g, h, l1, l2);
         e.derived = Rational(m.simplicial_volume.value());
       },
       {"j", "k", "g", "h", "l1", "l2"}},
      {"connected-sum-2e-plus-3s",
       [](const PointFn& p, ResidualEntry& e) {
         const auto j = p.at("j"), k = p.at("k"), g = p.at("g"), h = p.at("h"),
                    l1 = p.at("l1"), l2 = p.at("l2");
         // stated: sum c1^2(X_m) + 4k(g-1)(h-1) - 4(j+k-1+l1) - l2, K3: c1^2 = 0
         e.stated = Rational(4 * k * (g - 1) * (h - 1) - 4 * (j + k - 1 + l1) - l2);
         const ManifoldDescriptor m = lemma_sum(j, k, g, h, l1, l2);
         e.derived = Rational(2 * m.euler + 3 * m.signature);
       },
       {"j", "k", "g", "h", "l1", "l2"}},
      {"connected-sum-2e-minus-3s",
       [](const PointFn& p, ResidualEntry& e) {
         const auto j = p.at("j"), k = p.at("k"), g = p.at("g"), h = p.at("h"),
                    l1 = p.at("l1"), l2 = p.at("l2");
         // K3: 2e - 3 sigma = 96
         e.stated = Rational(96 * j + 4 * k * (g - 1) * (h - 1) - 4 * (j + k - 1 + l1) + 5 * l2);
         const ManifoldDescriptor m = lemma_sum(j, k, g, h, l1, l2);
         e.derived = Rational(2 * m.euler - 3 * m.signature);
       },
       {"j", "k", "g", "h", "l1", "l2"}},
      {"gompf-b-plus",
       [](const PointFn& p, ResidualEntry& e) {
         const auto a = p.at("alpha"), b = p.at("beta");
         e.stated = Rational(4 * a + 2 * b - 1);
         e.derived = Rational(derive_betti(blocks::make_block(blocks::Gompf{a, b})).b_plus);
       },
       {"alpha", "beta"}},
      {"gompf-2e-plus-3s",
       [](const PointFn& p, ResidualEntry& e) {
         const auto a = p.at("alpha"), b = p.at("beta");
         e.stated = Rational(8 * b);
         const ManifoldDescriptor m = blocks::make_block(blocks::Gompf{a, b});
         e.derived = Rational(2 * m.euler + 3 * m.signature);
       },
       {"alpha", "beta"}},
      {"gompf-2e-minus-3s",
       [](const PointFn& p, ResidualEntry& e) {
         const auto a = p.at("alpha"), b = p.at("beta");
         e.stated = Rational(8 * (12 * a + b));
         const ManifoldDescriptor m = blocks::make_block(blocks::Gompf{a, b});
         e.derived = Rational(2 * m.euler - 3 * m.signature);
       },
       {"alpha", "beta"}},
      {"entropy-upper-coeff",
       [](const PointFn& p, ResidualEntry& e) {
         const auto g = p.at("g"), h = p.at("h");
         // printed upper coefficient 127/27 vs the exact quotient 256/54
         e.stated = Rational(127, 27) * Rational((g - 1) * (h - 1));
         const ManifoldDescriptor m = blocks::make_block(blocks::SurfaceProduct{g, h});
         const PiQuantity upper = m.entropy4.hi();
         e.derived = upper.divided_by_pi_squared().value().c0() * Rational(1, 54);
       },
       {"g", "h"}},
      {"ricci-corollary-threshold",
       [](const PointFn& p, ResidualEntry& e) {
         const auto j = p.at("j"), g = p.at("g"), h = p.at("h");
         // printed RHS of the specialization (K3 pieces: sum c1^2 = 0)
         e.stated = Rational(4 * (g - 1) * (h - 1), 3);
         // general RHS: (1/3) sum over ALL n = j+1 admissible summands
         std::int64_t sum = 0;
         for (const auto& s : k3_summands(j)) sum += derive_betti(s).c1_squared;
         sum += derive_betti(blocks::make_block(blocks::SurfaceProduct{g, h})).c1_squared;
         e.derived = Rational(sum, 3);
       },
       {"j", "g", "h"}},
      {"ricci-corollary-lhs",
       [](const PointFn& p, ResidualEntry& e) {
         const auto j = p.at("j"), l1 = p.at("l1"), l2 = p.at("l2");
         e.stated = Rational(4 * (2 + l1) + l2);
         const ManifoldDescriptor n = remainder_sum(l1, l2);
         e.derived = Rational(4 * (j + 1) - (2 * n.euler + 3 * n.signature));
       },
       {"j", "l1", "l2"}},
      {"ricci-corollary-n-characteristic",
       [](const PointFn& p, ResidualEntry& e) {
         const auto l1 = p.at("l1"), l2 = p.at("l2");
         // as printed: "4 - 4 l1 - l1" (the repeated l1 is audited, not fixed)
         e.stated = Rational(4 - 4 * l1 - l1);
         const ManifoldDescriptor n = remainder_sum(l1, l2);
         e.derived = Rational(2 * n.euler + 3 * n.signature);
       },
       {"l1", "l2"}},
  };
  return table;
}

Range grid_axis(const GridSpec& grid, const std::string& axis) {
  if (axis == "j") return grid.j;
  if (axis == "k") return grid.k;
  if (axis == "g") return grid.g;
  if (axis == "h") return grid.h;
  if (axis == "l1") return grid.l1;
  if (axis == "l2") return grid.l2;
  if (axis == "alpha") return grid.alpha;
  if (axis == "beta") return grid.beta;
  throw InvalidParameters("unknown grid axis " + axis);
}

}  // namespace

PiQuantity kappa_constant(std::int64_t g, std::int64_t h, int variant) {
  if (g < 1 || h < 1) throw InvalidParameters("kappa needs g, h >= 1");
  if (variant != 1295 && variant != 81) throw InvalidParameters("kappa variant is 1295 or 81");
  const Rational factor((g - 1) * (h - 1));
  return PiQuantity(Rational(4) * factor, 0, Rational(-24, variant) * factor);
}

std::vector<Witness> find_witnesses(const WitnessQuery& q, const PiSquareInterval& pi2) {
  if (q.g_max < 3 || q.h_max < 3) throw InvalidParameters("witness search needs g_max, h_max >= 3");
  if (q.l1_max < 0 || q.l2_max < 0) throw InvalidParameters("negative search bound");

  const bool mu = q.kind == PropertyKind::Mu;
  if (mu) {
    if (q.summands.size() != 1) {
      throw PreconditionFailed("the mu search takes exactly one summand besides the Gompf factor");
    }
    if (!q.summands.front().nonessential()) {
      throw PreconditionFailed("the mu search needs a nonessential summand");
    }
    if (q.alpha_max < 2) throw InvalidParameters("mu search needs alpha_max >= 2");
  } else if (q.summands.empty() || q.summands.size() > 2) {
    throw PreconditionFailed("witness search takes j = 1 or 2 summands");
  }

  const SummandData base = summand_data(q.summands, /*need_norm=*/!mu);
  const int variant = q.kind == PropertyKind::E ? 81 : 1295;
  std::vector<Witness> out;

  for (std::int64_t g = 3; g <= q.g_max; g += 2) {
    for (std::int64_t h = 3; h <= q.h_max; h += 2) {
      const std::int64_t area = (g - 1) * (h - 1);
      for (std::int64_t l1 = 1; l1 <= q.l1_max; ++l1) {
        for (std::int64_t l2 = 1; l2 <= q.l2_max; ++l2) {
          if (!mu) {
            const PiQuantity kappa = kappa_constant(g, h, variant);
            const PiQuantity norm_term =
                PiQuantity::inv_pi_squared(Rational(base.norm, variant));
            const std::int64_t mid = 4 * (base.j + l1) + l2;
            const PiQuantity m2 = PiQuantity::rational(Rational(base.sum_minus)) + kappa -
                                  norm_term -
                                  PiQuantity::rational(Rational(4 * (base.j + l1) - 5 * l2));
            const PiQuantity m3 = PiQuantity::rational(Rational(base.sum_plus)) + kappa -
                                  norm_term - PiQuantity::rational(Rational(mid));
            const PiQuantity m4 = PiQuantity::rational(
                Rational(mid) - Rational(base.sum_plus + 4 * area, 3));
            if (!positive(m2, pi2) || !positive(m3, pi2) || !positive(m4, pi2)) continue;

            Witness w;
            w.g = g;
            w.h = h;
            w.l1 = l1;
            w.l2 = l2;
            w.middle = mid;
            w.margins = {{"surface-side", m2}, {"characteristic-side", m3}, {"ricci-gate", m4}};
            w.band_hi = PiQuantity::rational(Rational(base.sum_plus)) + kappa - norm_term;
            w.band_lo = PiQuantity::rational(Rational(base.sum_plus + 4 * area, 3));
            w.manifold = assemble(q.summands, g, h, l1, l2);
            const std::int64_t gate = base.sum_plus + 4 * area;
            if (gate > 0) {
              w.manifold.add_certificate({CertificateKind::NegativeLambdaBar, kNegativeLambda});
              w.manifold.add_certificate(
                  {CertificateKind::NoQuasiNonsingularRicci, kRicciFromBand});
              if (q.kind == PropertyKind::E) {
                w.manifold.add_certificate({CertificateKind::NoEinstein, kEinsteinMode});
              }
            }
            w.property = property_check(w.manifold, q.kind, pi2);
            w.infinite_family = homotopy_k3_summand(q.summands);
            out.push_back(std::move(w));
          } else {
            for (std::int64_t alpha = 2; alpha <= q.alpha_max; ++alpha) {
              for (std::int64_t beta = 0; beta <= q.beta_max; ++beta) {
                if (((4 * alpha + 2 * beta - 1) % 4 + 4) % 4 != 3) continue;
                const std::int64_t c = base.sum_plus;
                const std::int64_t cm = base.sum_minus;
                const std::int64_t mid = 4 * (2 + l1) + l2;
                const Rational spread = Rational(20, 27) * Rational(area);
                const Rational m2 =
                    Rational(cm + 8 * (12 * alpha + beta)) - spread -
                    Rational(4 * (2 + l1) - 5 * l2);
                const Rational m3 = Rational(c + 8 * beta) - spread - Rational(mid);
                const Rational m4 =
                    Rational(mid) - Rational(c + 8 * beta + 4 * area, 3);
                if (m2.sign() <= 0 || m3.sign() <= 0 || m4.sign() <= 0) continue;

                Witness w;
                w.g = g;
                w.h = h;
                w.l1 = l1;
                w.l2 = l2;
                w.alpha = alpha;
                w.beta = beta;
                w.middle = mid;
                w.margins = {{"surface-side", PiQuantity::rational(m2)},
                             {"characteristic-side", PiQuantity::rational(m3)},
                             {"ricci-gate", PiQuantity::rational(m4)}};
                w.band_hi = PiQuantity::rational(Rational(c + 8 * beta) - spread);
                w.band_lo = PiQuantity::rational(Rational(c + 8 * beta + 4 * area, 3));
                std::vector<ManifoldDescriptor> pieces = q.summands;
                pieces.push_back(blocks::make_block(blocks::Gompf{alpha, beta}));
                w.manifold = assemble(pieces, g, h, l1, l2);
                const std::int64_t gate = c + 8 * beta + 4 * area;
                if (gate > 0) {
                  w.manifold.add_certificate({CertificateKind::NegativeLambdaBar, kNegativeLambda});
                  w.manifold.add_certificate(
                      {CertificateKind::NoQuasiNonsingularRicci, kRicciFromBand});
                }
                w.property = property_check(w.manifold, q.kind, pi2);
                w.infinite_family = homotopy_k3_summand(pieces);
                out.push_back(std::move(w));
              }
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::string> lemma_formula_ids() {
  std::vector<std::string> ids;
  for (const auto& f : formula_table()) ids.emplace_back(f.id);
  return ids;
}

ResidualReport lemma_check(const std::string& formula_id, const GridSpec& grid) {
  const Formula* formula = nullptr;
  for (const auto& f : formula_table()) {
    if (formula_id == f.id) {
      formula = &f;
      break;
    }
  }
  if (!formula) throw UnknownFormulaId("unknown formula id '" + formula_id + "'");

  ResidualReport report;
  report.formula_id = formula_id;

  // Cartesian product over the formula's axes.
  std::vector<Range> ranges;
  for (const auto* axis : formula->axes) {
    const Range r = grid_axis(grid, axis);
    if (r.lo > r.hi) throw InvalidParameters(std::string("empty grid range for ") + axis);
    ranges.push_back(r);
  }
  std::vector<std::int64_t> cursor;
  for (const auto& r : ranges) cursor.push_back(r.lo);

  while (true) {
    PointFn point;
    for (size_t i = 0; i < cursor.size(); ++i) point[formula->axes[i]] = cursor[i];
    ResidualEntry entry;
    push_point(entry, point);
    formula->eval(point, entry);
    entry.residual = entry.stated - entry.derived;
    if (!entry.residual.is_zero()) {
      report.all_zero = false;
      if (entry.residual.abs() > report.max_abs_residual) {
        report.max_abs_residual = entry.residual.abs();
      }
    }
    report.entries.push_back(std::move(entry));

    size_t i = 0;
    for (; i < cursor.size(); ++i) {
      if (cursor[i] < ranges[i].hi) {
        ++cursor[i];
        for (size_t k = 0; k < i; ++k) cursor[k] = ranges[k].lo;
        break;
      }
    }
    if (i == cursor.size()) break;
  }
  return report;
}

}  // namespace fourfold
