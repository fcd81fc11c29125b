// fourfold: exact-arithmetic calculator for closed smooth 4-manifold
// descriptors. Descriptor JSON files are the composition mechanism: commands
// read them, transform them, and write them, so shell pipelines mirror
// connected-sum trees.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "fourfold/admissibility.hpp"
#include "fourfold/blocks.hpp"
#include "fourfold/families.hpp"
#include "fourfold/geography.hpp"
#include "fourfold/json_io.hpp"
#include "fourfold/obstructions.hpp"
#include "fourfold/surgery.hpp"

using nlohmann::json;
using namespace fourfold;

namespace {

constexpr const char* kVersion = "fourfold 0.1.0";

struct GlobalOptions {
  unsigned pi2_digits = 0;  // 0 = default bracket
  bool quiet = false;
  bool assert_verdicts = false;

  PiSquareInterval interval() const {
    return pi2_digits == 0 ? default_pi2_interval() : refine_pi2_interval(pi2_digits);
  }
};

ManifoldDescriptor read_descriptor(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return descriptor_from_json(j);
  }
  return load_descriptor_file(path);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_output(const ManifoldDescriptor& d, const std::string& out_path) {
  const json j = descriptor_to_json(d);
  if (out_path.empty()) {
    emit(j);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << j.dump(2) << "\n";
}

// exit code 1 only for Fails under --assert; Undetermined stays 0
int verdict_exit(const GlobalOptions& g, const Verdict& v) {
  return g.assert_verdicts && v.is_fails() ? 1 : 0;
}

std::string decimal6(const PiQuantity& q) { return pq_to_decimal(q, 6).text; }

json bf_to_json(const BFVerdict& v) {
  return json{{"cond1", verdict_to_json(v.cond1)},
              {"cond2", verdict_to_json(v.cond2)},
              {"cond3", verdict_to_json(v.cond3)},
              {"overall", verdict_to_json(v.overall)}};
}

void print_bf_table(const ManifoldDescriptor& d, const BFVerdict& v) {
  const auto row = [](const char* name, const Verdict& verdict) {
    std::cout << "  " << name << ": " << verdict_state_str(verdict.state);
    for (const auto& r : verdict.reasons) std::cout << "\n      - " << r;
    std::cout << "\n";
  };
  std::cout << "admissibility of " << d.name << "\n";
  row("odd SW on canonical class   (1)", v.cond1);
  row("b+ - b1 == 3 (mod 4), b+ > 1 (2)", v.cond2);
  row("even half-pairings          (3)", v.cond3);
  row("overall", v.overall);
}

json witness_to_json(const Witness& w) {
  json margins = json::array();
  for (const auto& [label, m] : w.margins) {
    margins.push_back({{"name", label}, {"margin", pq_to_json(m)}, {"decimal", decimal6(m)}});
  }
  json j{{"g", w.g},
         {"h", w.h},
         {"l1", w.l1},
         {"l2", w.l2},
         {"middle", w.middle},
         {"band_lo", decimal6(w.band_lo)},
         {"band_hi", decimal6(w.band_hi)},
         {"margins", std::move(margins)},
         {"manifold", w.manifold.name},
         {"property", verdict_to_json(w.property)},
         {"countable_family", w.infinite_family}};
  if (w.alpha >= 0) {
    j["alpha"] = w.alpha;
    j["beta"] = w.beta;
  }
  return j;
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("range '" + text + "' is not N or LO..HI");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact calculator for 4-manifold descriptors, surgeries and obstructions"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--pi2-digits", global.pi2_digits,
                 "refine the certified pi^2 bracket to 10^-N (env FOURFOLD_PI2_DIGITS)")
      ->envname("FOURFOLD_PI2_DIGITS");
  app.add_flag("--quiet", global.quiet, "suppress the version banner");
  app.add_flag("--assert", global.assert_verdicts, "exit 1 when a checked verdict fails");

  int exit_code = 0;

  // ---- block
  auto* block = app.add_subcommand("block", "emit a catalog building block");
  std::string block_kind;
  std::vector<std::int64_t> block_params;
  bool block_table = false, block_json = false, amenable = false;
  std::string block_out;
  block->add_option("kind", block_kind)->required();
  block->add_option("params", block_params, "integer parameters of the kind");
  block->add_flag("--table", block_table, "human-readable summary");
  block->add_flag("--json", block_json, "descriptor JSON (the default)");
  block->add_flag("--amenable-rule", amenable,
                  "apply the optional amenable-pi1 => zero simplicial volume upgrade");
  block->add_option("-o,--out", block_out, "write the descriptor to a file");
  block->callback([&] {
    ManifoldDescriptor d = blocks::make_block(blocks::parse_block(block_kind, block_params));
    if (amenable) d = blocks::apply_amenable_volume_rule(d);
    if (block_table) {
      const BettiData b = derive_betti(d);
      std::cout << d.name << ": e=" << d.euler << " sigma=" << d.signature
                << " b1=" << d.b1.value() << " b2=" << b.b2 << " b+=" << b.b_plus
                << " c1^2=" << b.c1_squared << " w2=" << w2_str(d.w2) << " pi1=" << d.pi1.str()
                << "\n";
      return;
    }
    write_output(d, block_out);
  });

  // ---- validate
  auto* validate = app.add_subcommand("validate", "audit descriptor invariants");
  std::string validate_path = "-";
  validate->add_option("file", validate_path, "descriptor file, or - for stdin");
  validate->callback([&] {
    const Verdict v = validate_descriptor(read_descriptor(validate_path));
    emit(verdict_to_json(v));
    exit_code = verdict_exit(global, v);
  });

  // ---- sum
  auto* sum = app.add_subcommand("sum", "connected sum of descriptor files");
  std::vector<std::string> sum_files;
  std::string sum_out;
  sum->add_option("files", sum_files, "descriptor files")->required();
  sum->add_option("-o,--out", sum_out);
  sum->callback([&] {
    std::vector<ManifoldDescriptor> parts;
    for (const auto& f : sum_files) parts.push_back(read_descriptor(f));
    write_output(connected_sum(parts), sum_out);
  });

  // ---- surger
  auto* surger = app.add_subcommand("surger", "torus surgery on a descriptor");
  std::string surger_file, surger_effect, surger_coeff, surger_out;
  bool luttinger = false;
  surger->add_option("file", surger_file)->required();
  surger->add_option("--effect", surger_effect, "kill | undo | torsion:p")->required();
  surger->add_flag("--luttinger", luttinger, "symplectic Luttinger surgery (1/q transform)");
  surger->add_option("--coeff", surger_coeff, "surgery coefficient p/q (default 1/1)");
  surger->add_option("-o,--out", surger_out);
  surger->callback([&] {
    TorusSurgerySpec spec;
    if (surger_effect == "kill") {
      spec = TorusSurgerySpec::kill(luttinger);
    } else if (surger_effect == "undo") {
      spec = TorusSurgerySpec::undo(luttinger);
    } else if (surger_effect.rfind("torsion:", 0) == 0) {
      spec = TorusSurgerySpec::add_torsion(std::stoll(surger_effect.substr(8)));
      spec.symplectic_luttinger = luttinger;
    } else {
      throw InvalidParameters("--effect must be kill, undo or torsion:p");
    }
    if (!surger_coeff.empty()) {
      const auto slash = surger_coeff.find('/');
      spec.coeff_p = std::stoll(surger_coeff.substr(0, slash));
      spec.coeff_q = slash == std::string::npos ? 1 : std::stoll(surger_coeff.substr(slash + 1));
    }
    write_output(torus_surgery(read_descriptor(surger_file), spec), surger_out);
  });

  // ---- blowup
  auto* blowup = app.add_subcommand("blowup", "symplectic blow-ups at points");
  std::string blowup_file, blowup_out;
  std::int64_t blowup_n = 1;
  blowup->add_option("file", blowup_file)->required();
  blowup->add_option("-n", blowup_n, "number of blow-ups")->required();
  blowup->add_option("-o,--out", blowup_out);
  blowup->callback(
      [&] { write_output(blow_up(read_descriptor(blowup_file), blowup_n), blowup_out); });

  // ---- check
  auto* check = app.add_subcommand("check", "decide a predicate on descriptors");
  std::string check_what;
  std::vector<std::string> check_files;
  std::string check_n;
  bool strict = false, check_table = false;
  std::string check_out;
  check->add_option("predicate", check_what, "bf | ht | ricci | property:R | property:E | property:mu")
      ->required();
  check->add_option("files", check_files, "descriptor files")->required();
  check->add_option("--n", check_n, "remainder descriptor for ricci (default: S4-like trivial)");
  check->add_flag("--strict", strict, "strict inequalities for ht");
  check->add_flag("--table", check_table);
  check->add_option("-o,--out", check_out, "write the obstructed sum (ricci)");
  check->callback([&] {
    const PiSquareInterval I = global.interval();
    if (check_what == "bf") {
      const ManifoldDescriptor d = read_descriptor(check_files.at(0));
      const BFVerdict v = check_bf(d);
      if (check_table) {
        print_bf_table(d, v);
      } else {
        emit(bf_to_json(v));
      }
      exit_code = verdict_exit(global, v.overall);
    } else if (check_what == "ht") {
      const ManifoldDescriptor d = read_descriptor(check_files.at(0));
      const HTReport r = ht_report(d, strict, I);
      emit(json{{"classic", verdict_to_json(r.classic)},
                {"gromov_1295", verdict_to_json(r.gromov_1295)},
                {"gromov_81", verdict_to_json(r.gromov_81)},
                {"entropy_54", verdict_to_json(r.entropy_54)}});
      if (global.assert_verdicts &&
          (r.classic.is_fails() || r.gromov_1295.is_fails() || r.gromov_81.is_fails() ||
           r.entropy_54.is_fails())) {
        exit_code = 1;
      }
    } else if (check_what == "ricci") {
      std::vector<ManifoldDescriptor> summands;
      for (const auto& f : check_files) summands.push_back(read_descriptor(f));
      ManifoldDescriptor n;
      if (check_n.empty()) {
        n.name = "S4";
        n.euler = 2;
        n.b1 = Knowledge<std::int64_t>::known(0);
        n.w2 = W2Type::Spin;
        n.simplicial_volume = Knowledge<std::int64_t>::known(0);
        n.entropy4 = Knowledge<PiQuantity>::known(PiQuantity());
        n.add_certificate({CertificateKind::Nonessential, "simply connected"});
      } else {
        n = read_descriptor(check_n);
      }
      const ObstructionOutcome out = ricci_flow_obstruction(summands, n);
      emit(verdict_to_json(out.verdict));
      if (!check_out.empty()) write_output(out.obstructed_sum, check_out);
      exit_code = verdict_exit(global, out.verdict);
    } else if (check_what.rfind("property:", 0) == 0) {
      const std::string name = check_what.substr(9);
      PropertyKind kind;
      if (name == "R") kind = PropertyKind::R;
      else if (name == "E") kind = PropertyKind::E;
      else if (name == "mu") kind = PropertyKind::Mu;
      else throw InvalidParameters("property must be R, E or mu");
      const Verdict v = property_check(read_descriptor(check_files.at(0)), kind, I);
      emit(verdict_to_json(v));
      exit_code = verdict_exit(global, v);
    } else {
      throw InvalidParameters("unknown predicate '" + check_what + "'");
    }
  });

  // ---- eval
  auto* eval = app.add_subcommand("eval", "curvature bounds for a connected sum");
  std::vector<std::string> eval_files;
  std::string eval_n;
  std::string eval_k = "1";
  eval->add_option("files", eval_files, "2 or 3 admissible summand files")->required();
  eval->add_option("--n", eval_n, "remainder descriptor (default: S4-like trivial)");
  eval->add_option("--k", eval_k, "lambda_k parameter, rational (default 1)");
  eval->callback([&] {
    std::vector<ManifoldDescriptor> summands;
    for (const auto& f : eval_files) summands.push_back(read_descriptor(f));
    ManifoldDescriptor n;
    if (eval_n.empty()) {
      n.name = "S4";
      n.euler = 2;
      n.b1 = Knowledge<std::int64_t>::known(0);
      n.w2 = W2Type::Spin;
      n.simplicial_volume = Knowledge<std::int64_t>::known(0);
      n.entropy4 = Knowledge<PiQuantity>::known(PiQuantity());
      n.add_certificate({CertificateKind::Nonessential, "simply connected"});
    } else {
      n = read_descriptor(eval_n);
    }
    const CurvatureBounds cb = curvature_bounds(summands, n);
    const Rational k = Rational::parse(eval_k);
    json j{{"c1sq_sum", cb.c1sq_sum.str()},
           {"scalar_l2", pq_to_json(cb.scalar_l2)},
           {"scalar_l2_decimal", decimal6(cb.scalar_l2)},
           {"weyl_mixed", pq_to_json(cb.weyl_mixed)},
           {"yamabe_upper", cb.yamabe_upper.str()},
           {"yamabe_upper_decimal", cb.yamabe_upper.to_decimal(6).text},
           {"yamabe_sign", cb.yamabe_upper.sign()}};
    if (k >= Rational(2, 3)) {
      const RadicalBound lk = cb.lambda_k_upper(k);
      j["lambda_k_upper"] = lk.str();
      j["lambda_k_upper_decimal"] = lk.to_decimal(6).text;
    }
    emit(j);
  });

  // ---- enumerate
  auto* enumerate = app.add_subcommand("enumerate", "search witness parameter tuples");
  std::string enum_kind = "R", enum_summands, enum_csv;
  WitnessQuery query;
  bool first_only = false, all = false;
  enumerate->add_option("--kind", enum_kind, "R | E | mu")->required();
  enumerate->add_option("--summands", enum_summands, "comma-separated descriptor files")
      ->required();
  enumerate->add_option("--gmax", query.g_max)->required();
  enumerate->add_option("--hmax", query.h_max)->required();
  enumerate->add_option("--l1max", query.l1_max)->required();
  enumerate->add_option("--l2max", query.l2_max)->required();
  enumerate->add_option("--alpha-max", query.alpha_max, "mu only");
  enumerate->add_option("--beta-max", query.beta_max, "mu only");
  enumerate->add_flag("--first", first_only, "emit only the lexicographically first witness");
  enumerate->add_flag("--all", all, "emit all witnesses (the default)");
  enumerate->add_option("--csv", enum_csv, "also write a CSV table");
  enumerate->callback([&] {
    if (enum_kind == "R") query.kind = PropertyKind::R;
    else if (enum_kind == "E") query.kind = PropertyKind::E;
    else if (enum_kind == "mu") query.kind = PropertyKind::Mu;
    else throw InvalidParameters("--kind must be R, E or mu");
    std::string token;
    std::stringstream ss(enum_summands);
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) query.summands.push_back(read_descriptor(token));
    }
    auto witnesses = find_witnesses(query, global.interval());
    if (first_only && witnesses.size() > 1) witnesses.resize(1);

    if (!enum_csv.empty()) {
      std::ofstream csv(enum_csv);
      if (!csv) throw Error("cannot write '" + enum_csv + "'");
      csv << "g,h,l1,l2,alpha,beta,middle,band_lo,band_hi,property\n";
      for (const auto& w : witnesses) {
        csv << w.g << "," << w.h << "," << w.l1 << "," << w.l2 << ","
            << (w.alpha >= 0 ? std::to_string(w.alpha) : "") << ","
            << (w.beta >= 0 ? std::to_string(w.beta) : "") << "," << w.middle << ","
            << decimal6(w.band_lo) << "," << decimal6(w.band_hi) << ","
            << verdict_state_str(w.property.state) << "\n";
      }
    }
    json arr = json::array();
    for (const auto& w : witnesses) arr.push_back(witness_to_json(w));
    emit(json{{"kind", enum_kind}, {"count", witnesses.size()}, {"witnesses", std::move(arr)}});
  });

  // ---- verify-lemmas
  auto* verify = app.add_subcommand("verify-lemmas", "audit printed closed forms on a grid");
  std::string lemma_id;
  std::string rg = "3..3", rh = "3..3", rk = "1..1", rj = "1..1", rl1 = "1..1", rl2 = "1..1",
              ralpha = "2..2", rbeta = "0..0";
  verify->set_help_flag("--help", "print help");  // frees --h for the grid range
  std::string grid_spec;
  verify->add_option("--id", lemma_id, "formula id, or 'all'")->required();
  verify->add_option("--grid", grid_spec, "compact form, e.g. g=3..5,h=3..5,k=1..2");
  verify->add_option("--g", rg);
  verify->add_option("--h", rh);
  verify->add_option("--k", rk);
  verify->add_option("--j", rj);
  verify->add_option("--l1", rl1);
  verify->add_option("--l2", rl2);
  verify->add_option("--alpha", ralpha);
  verify->add_option("--beta", rbeta);
  verify->callback([&] {
    GridSpec grid;
    grid.g = parse_range(rg);
    grid.h = parse_range(rh);
    grid.k = parse_range(rk);
    grid.j = parse_range(rj);
    grid.l1 = parse_range(rl1);
    grid.l2 = parse_range(rl2);
    grid.alpha = parse_range(ralpha);
    grid.beta = parse_range(rbeta);
    if (!grid_spec.empty()) {
      std::stringstream ss(grid_spec);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("--grid entries look like g=3..5");
        const std::string axis = item.substr(0, eq);
        const Range r = parse_range(item.substr(eq + 1));
        if (axis == "g") grid.g = r;
        else if (axis == "h") grid.h = r;
        else if (axis == "k") grid.k = r;
        else if (axis == "j") grid.j = r;
        else if (axis == "l1") grid.l1 = r;
        else if (axis == "l2") grid.l2 = r;
        else if (axis == "alpha") grid.alpha = r;
        else if (axis == "beta") grid.beta = r;
        else throw ParseError("unknown grid axis '" + axis + "'");
      }
    }
    std::vector<std::string> ids;
    if (lemma_id == "all") {
      ids = lemma_formula_ids();
    } else {
      ids.push_back(lemma_id);
    }
    json out = json::array();
    for (const auto& id : ids) {
      const ResidualReport r = lemma_check(id, grid);
      json entries = json::array();
      for (const auto& e : r.entries) {
        entries.push_back({{"point", e.point},
                           {"stated", e.stated.str()},
                           {"derived", e.derived.str()},
                           {"residual", e.residual.str()}});
      }
      out.push_back({{"formula", r.formula_id},
                     {"all_zero", r.all_zero},
                     {"max_abs_residual", r.max_abs_residual.str()},
                     {"entries", std::move(entries)}});
    }
    emit(out);
  });

  // ---- scan
  auto* scan = app.add_subcommand("scan", "geography lattice scan");
  std::string ra = "8..16", rb = "-8..-2", scan_csv;
  bool mod8_only = false;
  scan->add_option("--a", ra, "euler characteristic range LO..HI")->required();
  scan->add_option("--b", rb, "signature range LO..HI")->required();
  scan->add_flag("--mod8", mod8_only, "keep only a+b == 0 (mod 8)");
  scan->add_option("--csv", scan_csv);
  scan->callback([&] {
    const Range ar = parse_range(ra), br = parse_range(rb);
    const auto rows = geography_scan(ar.lo, ar.hi, br.lo, br.hi, mod8_only);
    const auto row_fields = [](const ScanRow& r) {
      return std::tuple(r.a, r.b, r.status.str(), r.mod8 ? 1 : 0,
                        r.alpha ? std::to_string(*r.alpha) : std::string(),
                        r.beta ? std::to_string(*r.beta) : std::string(), r.bf_verdict);
    };
    if (!scan_csv.empty()) {
      std::ofstream csv(scan_csv);
      if (!csv) throw Error("cannot write '" + scan_csv + "'");
      csv << "a,b,status,mod8,alpha,beta,bf_verdict\n";
      for (const auto& r : rows) {
        const auto [a, b, status, mod8, alpha, beta, bf] = row_fields(r);
        csv << a << "," << b << "," << status << "," << mod8 << "," << alpha << "," << beta << ","
            << bf << "\n";
      }
    }
    json arr = json::array();
    for (const auto& r : rows) {
      const auto [a, b, status, mod8, alpha, beta, bf] = row_fields(r);
      json jr{{"a", a}, {"b", b}, {"status", status}, {"mod8", r.mod8}};
      if (r.alpha) jr["alpha"] = *r.alpha;
      if (r.beta) jr["beta"] = *r.beta;
      if (!bf.empty()) jr["bf_verdict"] = bf;
      arr.push_back(std::move(jr));
    }
    emit(arr);
  });

  CLI11_PARSE(app, argc, argv);
  if (!global.quiet) std::cerr << kVersion << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fourfold::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
