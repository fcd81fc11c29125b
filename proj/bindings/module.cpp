// Python bindings for the fourfold core. Descriptors cross the boundary as a
// real class; structured results (verdicts, reports, witnesses) cross as
// plain dicts via the JSON layer.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "fourfold/admissibility.hpp"
#include "fourfold/blocks.hpp"
#include "fourfold/families.hpp"
#include "fourfold/geography.hpp"
#include "fourfold/json_io.hpp"
#include "fourfold/obstructions.hpp"
#include "fourfold/surgery.hpp"

namespace py = pybind11;
using namespace fourfold;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

py::dict verdict_to_py(const Verdict& v) { return json_to_py(verdict_to_json(v)); }

PropertyKind parse_property(const std::string& kind) {
  if (kind == "R") return PropertyKind::R;
  if (kind == "E") return PropertyKind::E;
  if (kind == "mu") return PropertyKind::Mu;
  throw InvalidParameters("property kind must be R, E or mu");
}

PiSquareInterval interval_for(unsigned digits) {
  return digits == 0 ? default_pi2_interval() : refine_pi2_interval(digits);
}

TorusSurgerySpec parse_surgery(const std::string& effect, bool luttinger, std::int64_t p,
                               std::int64_t q) {
  if (effect == "kill") return TorusSurgerySpec::kill(luttinger, q);
  if (effect == "undo") return TorusSurgerySpec::undo(luttinger, q);
  if (effect == "torsion") {
    TorusSurgerySpec s = TorusSurgerySpec::add_torsion(p, q);
    s.symplectic_luttinger = luttinger;
    return s;
  }
  throw InvalidParameters("effect must be kill, undo or torsion");
}

py::dict witness_to_py(const Witness& w) {
  py::dict d;
  d["g"] = w.g;
  d["h"] = w.h;
  d["l1"] = w.l1;
  d["l2"] = w.l2;
  if (w.alpha >= 0) {
    d["alpha"] = w.alpha;
    d["beta"] = w.beta;
  }
  d["middle"] = w.middle;
  d["band_lo"] = pq_to_decimal(w.band_lo, 6).text;
  d["band_hi"] = pq_to_decimal(w.band_hi, 6).text;
  py::list margins;
  for (const auto& [label, m] : w.margins) {
    py::dict entry;
    entry["name"] = label;
    entry["margin"] = json_to_py(pq_to_json(m));
    entry["decimal"] = pq_to_decimal(m, 6).text;
    margins.append(entry);
  }
  d["margins"] = margins;
  d["manifold"] = w.manifold;
  d["property"] = verdict_to_py(w.property);
  d["countable_family"] = w.infinite_family;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic calculator for closed smooth 4-manifold descriptors";

  py::register_exception<Error>(m, "FourfoldError");

  py::class_<ManifoldDescriptor>(m, "Descriptor")
      .def_readonly("name", &ManifoldDescriptor::name)
      .def_readonly("euler", &ManifoldDescriptor::euler)
      .def_readonly("signature", &ManifoldDescriptor::signature)
      .def_property_readonly("b1",
                             [](const ManifoldDescriptor& d) -> py::object {
                               if (!d.b1.is_known()) return py::none();
                               return py::int_(d.b1.value());
                             })
      .def_property_readonly("w2", [](const ManifoldDescriptor& d) { return w2_str(d.w2); })
      .def_property_readonly("pi1", [](const ManifoldDescriptor& d) { return d.pi1.str(); })
      .def_property_readonly("simplicial_volume",
                             [](const ManifoldDescriptor& d) -> py::object {
                               if (!d.simplicial_volume.is_known()) return py::none();
                               return py::int_(d.simplicial_volume.value());
                             })
      .def_property_readonly("certificates",
                             [](const ManifoldDescriptor& d) {
                               py::list out;
                               for (const auto& c : d.certificates) {
                                 out.append(py::make_tuple(certificate_kind_str(c.kind),
                                                           c.provenance));
                               }
                               return out;
                             })
      .def_readonly("trace", &ManifoldDescriptor::trace)
      .def("betti",
           [](const ManifoldDescriptor& d) {
             const BettiData b = derive_betti(d);
             py::dict out;
             out["b2"] = b.b2;
             out["b_plus"] = b.b_plus;
             out["b_minus"] = b.b_minus;
             out["c1_squared"] = b.c1_squared;
             return out;
           })
      .def("validate", [](const ManifoldDescriptor& d) { return verdict_to_py(validate_descriptor(d)); })
      .def("to_json", [](const ManifoldDescriptor& d) { return descriptor_to_json(d).dump(2); })
      .def_static("from_json",
                  [](const std::string& text) { return descriptor_from_json(json::parse(text)); })
      .def("__repr__", [](const ManifoldDescriptor& d) {
        return "<Descriptor " + d.name + " e=" + std::to_string(d.euler) +
               " sigma=" + std::to_string(d.signature) + ">";
      });

  // catalog
  m.def("surface_product",
        [](std::int64_t g, std::int64_t h) { return blocks::make_block(blocks::SurfaceProduct{g, h}); },
        py::arg("g"), py::arg("h"));
  m.def("k3", [] { return blocks::make_block(blocks::K3{}); });
  m.def("homotopy_k3", [](std::int64_t mm) { return blocks::make_block(blocks::HomotopyK3{mm}); },
        py::arg("m"));
  m.def("cp2", [] { return blocks::make_block(blocks::CP2{}); });
  m.def("cp2bar", [] { return blocks::make_block(blocks::CP2Bar{}); });
  m.def("s1xs3", [] { return blocks::make_block(blocks::S1xS3{}); });
  m.def("yp", [](std::int64_t p) { return blocks::make_block(blocks::Yp{p}); }, py::arg("p"));
  m.def("primary_kodaira", [] { return blocks::make_block(blocks::PrimaryKodaira{}); });
  m.def("gompf",
        [](std::int64_t alpha, std::int64_t beta) {
          return blocks::make_block(blocks::Gompf{alpha, beta});
        },
        py::arg("alpha"), py::arg("beta"));
  m.def("minimal_sc",
        [](std::int64_t a, std::int64_t b) { return blocks::make_block(blocks::MinimalSc{a, b}); },
        py::arg("a"), py::arg("b"));
  m.def("irreducible_z",
        [](std::int64_t a, std::int64_t b) { return blocks::make_block(blocks::IrreducibleZ{a, b}); },
        py::arg("a"), py::arg("b"));
  m.def("irreducible_zp",
        [](std::int64_t a, std::int64_t b, std::int64_t p) {
          return blocks::make_block(blocks::IrreducibleZp{a, b, p});
        },
        py::arg("a"), py::arg("b"), py::arg("p"));

  // surgery calculus
  m.def("connected_sum", &connected_sum, py::arg("parts"));
  m.def("torus_surgery",
        [](const ManifoldDescriptor& d, const std::string& effect, bool luttinger, std::int64_t p,
           std::int64_t q) { return torus_surgery(d, parse_surgery(effect, luttinger, p, q)); },
        py::arg("descriptor"), py::arg("effect"), py::arg("luttinger") = true, py::arg("p") = 1,
        py::arg("q") = 1);
  m.def("blow_up", &blow_up, py::arg("descriptor"), py::arg("n"));

  // predicates
  m.def("check_bf", [](const ManifoldDescriptor& d) {
    const BFVerdict v = check_bf(d);
    py::dict out;
    out["cond1"] = verdict_to_py(v.cond1);
    out["cond2"] = verdict_to_py(v.cond2);
    out["cond3"] = verdict_to_py(v.cond3);
    out["overall"] = verdict_to_py(v.overall);
    return out;
  });
  m.def("ht_report",
        [](const ManifoldDescriptor& d, bool strict, unsigned pi2_digits) {
          const HTReport r = ht_report(d, strict, interval_for(pi2_digits));
          py::dict out;
          out["classic"] = verdict_to_py(r.classic);
          out["gromov_1295"] = verdict_to_py(r.gromov_1295);
          out["gromov_81"] = verdict_to_py(r.gromov_81);
          out["entropy_54"] = verdict_to_py(r.entropy_54);
          return out;
        },
        py::arg("descriptor"), py::arg("strict") = false, py::arg("pi2_digits") = 0);
  m.def("property_check",
        [](const ManifoldDescriptor& d, const std::string& kind, unsigned pi2_digits) {
          return verdict_to_py(property_check(d, parse_property(kind), interval_for(pi2_digits)));
        },
        py::arg("descriptor"), py::arg("kind"), py::arg("pi2_digits") = 0);
  m.def("ricci_flow_obstruction",
        [](const std::vector<ManifoldDescriptor>& summands, const ManifoldDescriptor& n) {
          const ObstructionOutcome out = ricci_flow_obstruction(summands, n);
          return py::make_tuple(verdict_to_py(out.verdict), out.obstructed_sum);
        },
        py::arg("summands"), py::arg("remainder"));
  m.def("curvature_bounds",
        [](const std::vector<ManifoldDescriptor>& summands, const ManifoldDescriptor& n) {
          const CurvatureBounds cb = curvature_bounds(summands, n);
          py::dict out;
          out["c1sq_sum"] = cb.c1sq_sum.str();
          out["scalar_l2"] = json_to_py(pq_to_json(cb.scalar_l2));
          out["scalar_l2_decimal"] = pq_to_decimal(cb.scalar_l2, 6).text;
          out["weyl_mixed"] = json_to_py(pq_to_json(cb.weyl_mixed));
          out["yamabe_upper"] = cb.yamabe_upper.str();
          out["yamabe_upper_decimal"] = cb.yamabe_upper.to_decimal(6).text;
          out["yamabe_sign"] = cb.yamabe_upper.sign();
          return out;
        },
        py::arg("summands"), py::arg("remainder"));
  m.def("monopole_family",
        [](const ManifoldDescriptor& x, const ManifoldDescriptor& ym, const ManifoldDescriptor& n) {
          const MonopoleFamily f = monopole_family(x, ym, n);
          py::dict out;
          const auto big = [](const mpz_class& v) {
            return py::int_(py::str(v.get_str()));
          };
          out["formal_count"] = big(f.formal_count);
          out["distinct_count"] = big(f.distinct_count);
          out["materialized_classes"] = f.classes.size();
          return out;
        },
        py::arg("x"), py::arg("ym"), py::arg("remainder"));

  // families and geography
  m.def("kappa_constant",
        [](std::int64_t g, std::int64_t h, int variant, unsigned digits) {
          const PiQuantity k = kappa_constant(g, h, variant);
          py::dict out;
          out["value"] = json_to_py(pq_to_json(k));
          out["decimal"] = pq_to_decimal(k, digits).text;
          return out;
        },
        py::arg("g"), py::arg("h"), py::arg("variant") = 1295, py::arg("digits") = 6);
  m.def("find_witnesses",
        [](const std::string& kind, const std::vector<ManifoldDescriptor>& summands,
           std::int64_t gmax, std::int64_t hmax, std::int64_t l1max, std::int64_t l2max,
           std::int64_t alpha_max, std::int64_t beta_max, unsigned pi2_digits) {
          WitnessQuery q;
          q.kind = parse_property(kind);
          q.summands = summands;
          q.g_max = gmax;
          q.h_max = hmax;
          q.l1_max = l1max;
          q.l2_max = l2max;
          q.alpha_max = alpha_max;
          q.beta_max = beta_max;
          py::list out;
          for (const auto& w : find_witnesses(q, interval_for(pi2_digits))) {
            out.append(witness_to_py(w));
          }
          return out;
        },
        py::arg("kind"), py::arg("summands"), py::arg("gmax"), py::arg("hmax"), py::arg("l1max"),
        py::arg("l2max"), py::arg("alpha_max") = 2, py::arg("beta_max") = 0,
        py::arg("pi2_digits") = 0);
  m.def("lemma_formula_ids", &lemma_formula_ids);
  m.def("lemma_check",
        [](const std::string& formula_id, std::int64_t g_lo, std::int64_t g_hi, std::int64_t h_lo,
           std::int64_t h_hi, std::int64_t k_lo, std::int64_t k_hi, std::int64_t j_lo,
           std::int64_t j_hi, std::int64_t l1_lo, std::int64_t l1_hi, std::int64_t l2_lo,
           std::int64_t l2_hi, std::int64_t alpha_lo, std::int64_t alpha_hi, std::int64_t beta_lo,
           std::int64_t beta_hi) {
          GridSpec grid{{j_lo, j_hi}, {k_lo, k_hi},   {g_lo, g_hi},       {h_lo, h_hi},
                        {l1_lo, l1_hi}, {l2_lo, l2_hi}, {alpha_lo, alpha_hi}, {beta_lo, beta_hi}};
          const ResidualReport r = lemma_check(formula_id, grid);
          py::list entries;
          for (const auto& e : r.entries) {
            py::dict entry;
            entry["point"] = e.point;
            entry["stated"] = e.stated.str();
            entry["derived"] = e.derived.str();
            entry["residual"] = e.residual.str();
            entries.append(entry);
          }
          py::dict out;
          out["formula"] = r.formula_id;
          out["all_zero"] = r.all_zero;
          out["max_abs_residual"] = r.max_abs_residual.str();
          out["entries"] = entries;
          return out;
        },
        py::arg("formula_id"), py::arg("g_lo") = 3, py::arg("g_hi") = 3, py::arg("h_lo") = 3,
        py::arg("h_hi") = 3, py::arg("k_lo") = 1, py::arg("k_hi") = 1, py::arg("j_lo") = 1,
        py::arg("j_hi") = 1, py::arg("l1_lo") = 1, py::arg("l1_hi") = 1, py::arg("l2_lo") = 1,
        py::arg("l2_hi") = 1, py::arg("alpha_lo") = 2, py::arg("alpha_hi") = 2,
        py::arg("beta_lo") = 0, py::arg("beta_hi") = 0);
  m.def("geography_status",
        [](std::int64_t a, std::int64_t b) { return geography_status(a, b).str(); }, py::arg("a"),
        py::arg("b"));
  m.def("build_lattice_family",
        [](std::int64_t a, std::int64_t b, py::object p) {
          std::optional<std::int64_t> order;
          if (!p.is_none()) order = p.cast<std::int64_t>();
          const LatticeBuild built = build_lattice_family(a, b, order);
          return py::make_tuple(built.manifold, built.model.str());
        },
        py::arg("a"), py::arg("b"), py::arg("p") = py::none());
  m.def("classify_homeo",
        [](const ManifoldDescriptor& d) -> py::object {
          const auto model = classify_homeo(d);
          if (!model) return py::none();
          return py::str(model->str());
        },
        py::arg("descriptor"));
  m.def("geography_scan",
        [](std::int64_t a_lo, std::int64_t a_hi, std::int64_t b_lo, std::int64_t b_hi,
           bool mod8_only) {
          py::list out;
          for (const auto& r : geography_scan(a_lo, a_hi, b_lo, b_hi, mod8_only)) {
            py::dict row;
            row["a"] = r.a;
            row["b"] = r.b;
            row["status"] = r.status.str();
            row["mod8"] = r.mod8;
            if (r.alpha) row["alpha"] = *r.alpha;
            if (r.beta) row["beta"] = *r.beta;
            if (!r.bf_verdict.empty()) row["bf_verdict"] = r.bf_verdict;
            out.append(row);
          }
          return out;
        },
        py::arg("a_lo"), py::arg("a_hi"), py::arg("b_lo"), py::arg("b_hi"),
        py::arg("mod8_only") = false);

  // exact pi^2 arithmetic
  m.def("pq_sign",
        [](const std::string& c0, const std::string& c2, const std::string& cm2,
           unsigned pi2_digits) {
          const PiQuantity q(Rational::parse(c0), Rational::parse(c2), Rational::parse(cm2));
          return sign_str(pq_sign(q, interval_for(pi2_digits)));
        },
        py::arg("c0"), py::arg("c2") = "0", py::arg("cm2") = "0", py::arg("pi2_digits") = 0);
  m.def("pq_to_decimal",
        [](const std::string& c0, const std::string& c2, const std::string& cm2, unsigned digits) {
          const PiQuantity q(Rational::parse(c0), Rational::parse(c2), Rational::parse(cm2));
          return pq_to_decimal(q, digits).text;
        },
        py::arg("c0"), py::arg("c2") = "0", py::arg("cm2") = "0", py::arg("digits") = 6);
  m.def("pi2_interval", [](unsigned digits) {
    const PiSquareInterval I = interval_for(digits);
    return py::make_tuple(I.lo.str(), I.hi.str());
  }, py::arg("digits") = 0);
}
