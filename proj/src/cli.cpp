#include "sl2rep/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sl2rep/errors.hpp"
#include "sl2rep/json_io.hpp"
#include "sl2rep/weeks.hpp"

namespace sl2rep {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation load_presentation(const std::string& path) {
  return parse_presentation(read_file(path));
}

Representation load_representation(const std::string& path) {
  return representation_from_json(json::parse(read_file(path)));
}

struct CommonFlags {
  double tol_rep = kRepTol;
  double tol_rank = kRankTol;
  int ball = 6;
  int order = 4;
  double drift_floor = 0.1;
  std::string json_path;
  unsigned seed = 12345;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--tol-rep", f.tol_rep, "on-variety residual tolerance");
  cmd->add_option("--tol-rank", f.tol_rank, "relative singular-value rank threshold");
  cmd->add_option("--ball", f.ball, "group ball length for drift scans");
  cmd->add_option("--order", f.order, "deformation truncation order");
  cmd->add_option("--json", f.json_path, "write the JSON report to this path");
  cmd->add_option("--seed", f.seed, "seed for randomized search fallbacks");
  cmd->add_option("--drift-floor", f.drift_floor, "required drift slope per unit word length");
}

void emit(const json& report, const CommonFlags& f, std::ostream& out) {
  if (!f.json_path.empty()) {
    std::ofstream jf(f.json_path);
    if (!jf) throw InvalidInputError("cannot write '" + f.json_path + "'");
    jf << canonical_dump(report);
  }
  (void)out;
}

json base_report(const std::string& command) {
  return {{"schema", report_schema_version()}, {"command", command}};
}

int cmd_parse(const std::string& file, const CommonFlags& f, std::ostream& out) {
  Presentation p = load_presentation(file);
  json report = base_report("parse");
  report["presentation"] = to_json(p);
  emit(report, f, out);
  out << "parsed: " << presentation_to_string(p) << "\n";
  out << "generators: " << p.generator_count << ", relators: " << p.relators.size() << "\n";
  return 0;
}

int cmd_abelian(const std::string& file, const CommonFlags& f, std::ostream& out) {
  Presentation p = load_presentation(file);
  AbelianizationResult ab = abelianization(p);
  json report = base_report("abelian");
  report["presentation"] = to_json(p);
  report["abelianization"] = to_json(ab);
  out << "invariant factors:";
  for (auto d : ab.invariant_factors) out << " " << d;
  out << "  (b1 = " << ab.rank_free << ")\n";
  if (ab.rank_free == 0) {
    auto reps = abelian_representations(p);
    json list = json::array();
    for (const auto& r : reps) list.push_back(representation_to_json(r));
    report["representations"] = list;
    report["count"] = reps.size();
    report["conjugacy_classes"] = dedup_by_conjugacy(reps).size();
    out << "abelian representations: " << reps.size() << " (conjugacy classes: "
        << report["conjugacy_classes"].get<std::size_t>() << ")\n";
  } else {
    report["representations"] = nullptr;
    out << "abelian family is positive-dimensional; enumeration refused\n";
  }
  emit(report, f, out);
  return 0;
}

int cmd_cohomology(const std::string& file, const std::string& rep_path, const CommonFlags& f,
                   std::ostream& out) {
  Presentation p = load_presentation(file);
  Representation rho =
      rep_path.empty() ? trivial_representation(p) : load_representation(rep_path);
  if (rho.presentation != p)
    throw InvalidInputError("representation was built over a different presentation");
  if (!rho.on_variety(f.tol_rep))
    throw InvalidInputError("representation is off-variety (residual " +
                            std::to_string(rho.residual) + ")");
  CohomologyWorkspace ws(rho, f.tol_rank);
  json report = base_report("cohomology");
  report["presentation"] = to_json(p);
  report["representation"] = representation_to_json(rho);
  report["report"] = to_json(ws.report());
  json slices = json::array();
  for (const Cocycle& c : ws.slice_basis()) {
    json vals = json::array();
    for (const Sl2Vector& v : c.values) vals.push_back(to_json(v));
    slices.push_back(vals);
  }
  report["slice_basis"] = slices;
  LunaCheck luna = luna_hypothesis_check(rho);
  report["luna"] =
      json{{"semisimple", luna.semisimple}, {"trace", to_json(luna.trace)}, {"note", luna.note}};
  emit(report, f, out);
  const CohomologyReport& r = ws.report();
  out << "dim Z1 = " << r.dim_Z1 << ", dim B1 = " << r.dim_B1 << ", dim H1 = " << r.dim_H1
      << ", centralizer = " << r.dim_centralizer << "\n";
  if (r.cocycle_rank.ill_conditioned || r.coboundary_rank.ill_conditioned)
    out << "warning: rank decision spectral gap below 1e3\n";
  return 0;
}

int cmd_deform(const std::string& file, const std::string& rep_path, const CommonFlags& f,
               std::ostream& out) {
  Presentation p = load_presentation(file);
  Representation rho =
      rep_path.empty() ? trivial_representation(p) : load_representation(rep_path);
  if (!rho.on_variety(f.tol_rep))
    throw InvalidInputError("representation is off-variety (residual " +
                            std::to_string(rho.residual) + ")");
  CohomologyWorkspace ws(rho, f.tol_rank);
  json report = base_report("deform");
  report["presentation"] = to_json(p);
  report["report"] = to_json(ws.report());
  json directions = json::array();
  auto slices = ws.slice_basis();
  for (std::size_t idx = 0; idx < slices.size(); ++idx) {
    DeformationJet d = make_deformation_jet(rho, {slices[idx].values});
    json dir{{"index", idx}};
    json norms = json::array();
    int reached = 1;
    bool obstructed = false;
    for (int k = 1; k < f.order; ++k) {
      Eigen::VectorXcd obs = obstruction_vector(d);
      norms.push_back(obs.norm());
      auto next = extend_deformation(d);
      if (!next) {
        obstructed = true;
        break;
      }
      auto cochains = d.cochains;
      cochains.push_back(*next);
      d = make_deformation_jet(rho, std::move(cochains));
      reached = d.order();
    }
    dir["extends_to_order"] = reached;
    dir["obstructed"] = obstructed;
    dir["obstruction_norms"] = norms;
    directions.push_back(dir);
    out << "direction " << idx << ": "
        << (obstructed ? "obstructed at order " + std::to_string(reached + 1)
                       : "extends to order " + std::to_string(reached))
        << "\n";
  }
  if (slices.empty()) out << "dim H1 = 0: rigid, no slice directions to deform\n";
  report["directions"] = directions;
  emit(report, f, out);
  return 0;
}

int cmd_admissible(const std::string& file, const std::string& rep_path,
                   const std::string& ref_path, const CommonFlags& f, std::ostream& out) {
  Presentation p = load_presentation(file);
  Representation rho = load_representation(rep_path);
  Representation ref = load_representation(ref_path);
  VerdictOptions vopts;
  vopts.hermitian.seed = f.seed;
  vopts.slope_floor = f.drift_floor;
  Verdict v = admissibility_verdict(p, ref, rho, f.ball, vopts);
  json report = base_report("admissible");
  report["presentation"] = to_json(p);
  report["verdict"] = to_json(v);
  emit(report, f, out);
  out << to_string(v.kind) << ": " << v.rationale << "\n";
  return v.kind == VerdictKind::Inconclusive ? 2 : 0;
}

int cmd_weeks_demo(const CommonFlags& f, std::ostream& out) {
  const Presentation& p = weeks_presentation();
  json report = base_report("weeks-demo");
  report["presentation"] = to_json(p);

  AbelianizationResult ab = abelianization(p);
  report["abelianization"] = to_json(ab);
  out << "presentation: " << presentation_to_string(p) << "\n";
  out << "invariant factors:";
  for (auto d : ab.invariant_factors) out << " " << d;
  out << "  (b1 = " << ab.rank_free << ")\n";

  Representation ref = weeks_geometric(0);
  VerdictOptions vopts;
  vopts.hermitian.seed = f.seed;
  vopts.slope_floor = f.drift_floor;

  auto abelian = abelian_representations(p);
  json abelian_json = json::array();
  std::size_t certified = 0, isolated = 0;
  double worst_residual = 0.0;
  for (const Representation& rho : abelian) {
    Verdict v = admissibility_verdict(p, ref, rho, std::min(f.ball, 3), vopts);
    if (v.kind == VerdictKind::AdmissibleCertified) ++certified;
    worst_residual = std::max(worst_residual, rho.residual);
    int h1 = cohomology_report(rho, f.tol_rank).dim_H1;
    if (h1 == 0) ++isolated;
    json entry{{"images", json::array()},
               {"residual", rho.residual},
               {"verdict", to_string(v.kind)},
               {"dim_H1", h1}};
    for (const SL2Element& g : rho.images) entry["images"].push_back(to_json(g.m));
    abelian_json.push_back(entry);
  }
  report["abelian"] = {{"count", abelian.size()},
                       {"conjugacy_classes", dedup_by_conjugacy(abelian).size()},
                       {"max_residual", worst_residual},
                       {"certified_admissible", certified},
                       {"isolated_points", isolated},
                       {"representations", abelian_json}};
  out << "abelian representations: " << abelian.size() << " (max residual " << worst_residual
      << "), AdmissibleCertified: " << certified << ", isolated (dim H1 = 0): " << isolated
      << "\n";

  Representation triv = trivial_representation(p);
  CohomologyReport cr = cohomology_report(triv, f.tol_rank);
  report["trivial_cohomology"] = to_json(cr);
  out << "trivial rho cohomology: (Z1, B1, H1, centralizer) = (" << cr.dim_Z1 << ", "
      << cr.dim_B1 << ", " << cr.dim_H1 << ", " << cr.dim_centralizer << ")\n";

  // rigidity probe: the zero deformation is the only one, and it stays
  // unobstructed through order N
  {
    DeformationJet d = make_deformation_jet(
        triv, {Cochain(static_cast<std::size_t>(p.generator_count), Sl2Vector{})});
    double worst_obstruction = 0.0;
    while (d.order() < f.order) {
      worst_obstruction = std::max(worst_obstruction, obstruction_vector(d).norm());
      auto next = extend_deformation(d);
      if (!next) break;
      auto cochains = d.cochains;
      cochains.push_back(*next);
      d = make_deformation_jet(triv, std::move(cochains));
    }
    report["rigidity_probe"] = {{"order_reached", d.order()},
                                {"max_obstruction_norm", worst_obstruction}};
    out << "rigidity probe: zero deformation extends to order " << d.order()
        << " (max obstruction norm " << worst_obstruction << ")\n";
  }

  Verdict geo_verdict = admissibility_verdict(p, ref, ref, std::min(f.ball, 3), vopts);
  report["geometric"] = {{"root", 0},
                         {"residual", ref.residual},
                         {"trace_a", to_json(ref.images[0].m.trace())},
                         {"verdict", to_string(geo_verdict.kind)},
                         {"rationale", geo_verdict.rationale}};
  out << "geometric rho: residual " << ref.residual << ", verdict "
      << to_string(geo_verdict.kind) << "\n";

  DriftReport drift = drift_scan(p, ref, triv, f.ball);
  report["trivial_drift"] = to_json(drift);
  out << "trivial-rho drift minima by length:";
  for (double m : drift.min_drift) out << " " << m;
  out << "\n";

  emit(report, f, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SL2(C) representation variety toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string file, rep_path, ref_path;

  auto* parse_cmd = app.add_subcommand("parse", "parse a presentation file");
  parse_cmd->add_option("file", file)->required();
  add_common(parse_cmd, flags);

  auto* abelian_cmd = app.add_subcommand("abelian", "abelianization and diagonal representations");
  abelian_cmd->add_option("file", file)->required();
  add_common(abelian_cmd, flags);

  auto* coh_cmd = app.add_subcommand("cohomology", "twisted cohomology report at a representation");
  coh_cmd->add_option("file", file)->required();
  coh_cmd->add_option("--rep", rep_path, "representation JSON (default: trivial)");
  add_common(coh_cmd, flags);

  auto* def_cmd = app.add_subcommand("deform", "order-by-order deformation along slice directions");
  def_cmd->add_option("file", file)->required();
  def_cmd->add_option("--rep", rep_path, "representation JSON (default: trivial)");
  add_common(def_cmd, flags);

  auto* adm_cmd = app.add_subcommand("admissible", "admissibility verdict");
  adm_cmd->add_option("file", file)->required();
  adm_cmd->add_option("--rep", rep_path, "representation JSON")->required();
  adm_cmd->add_option("--ref", ref_path, "reference faithful discrete embedding JSON")->required();
  add_common(adm_cmd, flags);

  auto* demo_cmd = app.add_subcommand("weeks-demo", "reproduce the Weeks-manifold computations");
  add_common(demo_cmd, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(file, flags, out);
    if (abelian_cmd->parsed()) return cmd_abelian(file, flags, out);
    if (coh_cmd->parsed()) return cmd_cohomology(file, rep_path, flags, out);
    if (def_cmd->parsed()) return cmd_deform(file, rep_path, flags, out);
    if (adm_cmd->parsed()) return cmd_admissible(file, rep_path, ref_path, flags, out);
    if (demo_cmd->parsed()) return cmd_weeks_demo(flags, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace sl2rep
