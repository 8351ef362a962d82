#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "wallkit/json_io.hpp"
#include "wallkit/reference.hpp"

using namespace wallkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 3;

struct Opts {
  std::string format = "json";
  std::string output;
  uint64_t seed = 0;
};

using InputList = std::vector<std::pair<std::string, std::string>>;

void deliver(const Opts& o, const std::string& text) {
  if (o.output.empty())
    std::cout << text;
  else
    write_text_file(o.output, text);
}

int emit(const Opts& o, const std::string& command, const InputList& inputs, Json body,
         const std::string& summary, int code) {
  if (o.format == "json")
    deliver(o, dump_report(report_envelope(command, inputs, std::move(body))));
  else
    deliver(o, summary + "\n");
  return code;
}

std::string coords_text(const IntVec& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << "]";
  return os.str();
}

int cmd_lattice_info(const Opts& o, const std::string& spec) {
  LatticePtr l = lattice_from_json(Json(spec));
  Json body = lattice_report(l);
  InputList inputs;
  try {
    standard_lattice(spec);
  } catch (const Error&) {
    inputs.emplace_back("lattice", spec);  // spec named a file, not a builtin
  }
  auto [pos, neg] = l->signature();
  std::ostringstream s;
  s << l->label() << ": rank " << l->rank() << ", det " << l->determinant().get_str()
    << ", signature (" << pos << "," << neg << "), " << (l->is_even() ? "even" : "odd")
    << ", disc order " << discriminant_group(l).order.get_str();
  return emit(o, "lattice info", inputs, body, s.str(), kExitOk);
}

int cmd_wall(const Opts& o, const std::string& criterion, const std::string& v_path,
             const std::string& d_path) {
  LatticeVector v = vector_from_json(load_json_file(v_path));
  LatticeVector d = vector_from_json(load_json_file(d_path));
  WallVerdict verdict;
  if (criterion == "bm")
    verdict = bm_wall(v, d);
  else if (criterion == "yoshioka")
    verdict = yoshioka_wall(v, d);
  else
    verdict = mz_wall(v, d);
  Json body = wall_report(criterion, verdict);
  std::ostringstream s;
  if (verdict.is_wall)
    s << "wall " << criterion << ": WALL, clause " << wall_clause_name(verdict.clause)
      << ", witness " << coords_text(verdict.witness->coords);
  else
    s << "wall " << criterion << ": not a wall";
  return emit(o, "wall " + criterion, {{"v", v_path}, {"d", d_path}}, body, s.str(),
              verdict.is_wall ? kExitOk : kExitNegative);
}

int cmd_orbit_check(const Opts& o, const std::string& x_path, const std::string& y_path) {
  LatticeVector x = vector_from_json(load_json_file(x_path));
  LatticeVector y = vector_from_json(load_json_file(y_path));
  bool eq = orbit_equivalent(x, y);
  DiscriminantGroup dg = discriminant_group(x.lattice);
  Json body{{"equivalent", eq},
            {"square_x", int_to_json(norm(x))},
            {"square_y", int_to_json(norm(y))},
            {"div_x", int_to_json(divisibility(x))},
            {"div_y", int_to_json(divisibility(y))},
            {"disc_image_x", vec_to_json(disc_image(dg, x))},
            {"disc_image_y", vec_to_json(disc_image(dg, y))}};
  std::string s = std::string("orbit check: ") + (eq ? "equivalent" : "not equivalent");
  return emit(o, "orbit check", {{"x", x_path}, {"y", y_path}}, body, s,
              eq ? kExitOk : kExitNegative);
}

int cmd_orbit_map(const Opts& o, const std::string& x_path, const std::string& y_path) {
  LatticeVector x = vector_from_json(load_json_file(x_path));
  LatticeVector y = vector_from_json(load_json_file(y_path));
  Isometry g = mapping_isometry(x, y);
  Json body{{"isometry", mat_to_json(g.matrix)},
            {"det", int_to_json(determinant(g))},
            {"orientation", orientation_sign(g)},
            {"verified", g.apply(x).coords == y.coords}};
  return emit(o, "orbit map", {{"x", x_path}, {"y", y_path}}, body,
              "orbit map: isometry found and verified", kExitOk);
}

int cmd_mon_check(const Opts& o, long n, const std::string& iso_path) {
  Isometry g = isometry_from_json(load_json_file(iso_path));
  LatticePtr expected = standard_lattice("kummer(" + std::to_string(n) + ")");
  require(same_lattice(g.lattice, expected), ErrorCode::LatticeMismatch,
          "isometry does not act on kummer(" + std::to_string(n) + ")");
  MonVerdict v = mon_membership_kummer(g);
  Json body = mon_report(v);
  body["n"] = n;
  std::ostringstream s;
  s << "mon check: " << (v.member ? "member" : "not a member") << " (" << v.reason << ")";
  return emit(o, "mon check", {{"isometry", iso_path}}, body, s.str(),
              v.member ? kExitOk : kExitNegative);
}

int cmd_kummer_proof(const Opts& o, long n, const std::string& iso_path, long sample) {
  KummerModel m = kummer_model(n);
  std::vector<Isometry> gs;
  InputList inputs;
  if (!iso_path.empty()) {
    gs.push_back(isometry_from_json(load_json_file(iso_path)));
    require(same_lattice(gs.front().lattice, m.small), ErrorCode::LatticeMismatch,
            "isometry does not act on kummer(" + std::to_string(n) + ")");
    inputs.emplace_back("isometry", iso_path);
  } else if (sample > 0) {
    gs = sample_kummer_isometries(n, static_cast<size_t>(sample), o.seed);
  } else if (n == 5) {
    std::string path = fixture_dir() + "/kummer5_times5.json";
    gs.push_back(isometry_from_json(load_json_file(path)));
    inputs.emplace_back("isometry", path);
  } else {
    fail(ErrorCode::BadParam, "pass --isometry FILE or --sample K (the shipped fixture only covers n = 5)");
  }

  Json traces = Json::array();
  bool all_pell = true;
  long members = 0;
  for (const Isometry& g : gs) {
    KummerProofTrace tr = kummer_proof_trace(m, g);
    all_pell = all_pell && tr.pell_ok;
    members += tr.membership.member ? 1 : 0;
    traces.push_back(trace_report(tr));
  }
  Json body{{"n", n}, {"count", static_cast<long>(gs.size())}, {"traces", std::move(traces)}};
  if (sample > 0) body["seed"] = o.seed;
  std::ostringstream s;
  s << "kummer-proof: n=" << n << ", " << gs.size() << " trace(s), " << members
    << " member(s), norm identity " << (all_pell ? "holds" : "VIOLATED");
  return emit(o, "scenario kummer-proof", inputs, body, s.str(), all_pell ? kExitOk : kExitError);
}

int cmd_og10(const Opts& o, const std::string& fixture_path, const std::string& embedding_path,
             const std::string& f_path) {
  OG10Model model;
  InputList inputs;
  if (!fixture_path.empty() || !embedding_path.empty()) {
    require(!fixture_path.empty() && !embedding_path.empty(), ErrorCode::BadParam,
            "--fixture and --embedding must be given together");
    LatticePtr ambient = lattice_from_json(load_json_file(fixture_path));
    IntMat iota = mat_from_json(load_json_file(embedding_path).at("matrix"));
    model = og10_model(ambient, iota);
    inputs.emplace_back("fixture", fixture_path);
    inputs.emplace_back("embedding", embedding_path);
  } else {
    model = og10_model();
  }

  std::optional<LatticeVector> f;
  if (!f_path.empty()) {
    Json fj = load_json_file(f_path);
    if (fj.contains("lattice")) {
      LatticeVector fv = vector_from_json(fj);
      require(same_lattice(fv.lattice, model.ambient), ErrorCode::LatticeMismatch,
              "supplied f lives in a different lattice than the fixture");
      f = LatticeVector{model.ambient, fv.coords};
    } else {
      IntVec c = vec_from_json(fj.at("coords"));
      require(static_cast<int>(c.size()) == model.ambient->rank(), ErrorCode::ParseError,
              "f coords length does not match the fixture rank");
      f = LatticeVector{model.ambient, std::move(c)};
    }
    inputs.emplace_back("f", f_path);
  }

  OG10Certificate cert = og10_certificate(model, f);
  Json body = og10_report(cert);
  std::ostringstream s;
  s << "og10: " << (cert.all_checks_pass ? "all checks pass" : "CHECKS FAILED")
    << "; g maps d_hat " << coords_text(cert.d_hat.coords) << " to f "
    << coords_text(cert.f.coords) << " with orientation +1; premise: " << cert.premise;
  return emit(o, "scenario og10", inputs, body, s.str(),
              cert.all_checks_pass ? kExitOk : kExitNegative);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wallkit: exact arithmetic for wall divisors, discriminant groups, and "
               "monodromy certificates on integral quadratic lattices"};
  app.require_subcommand(1);
  Opts o;
  app.add_option("--format", o.format, "json (machine report) or text (one-line summary)")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "write the report to this file instead of stdout");
  app.add_option("--seed", o.seed, "seed for sampled isometries")->capture_default_str();

  auto* lattice_cmd = app.add_subcommand("lattice", "lattice inspection");
  lattice_cmd->require_subcommand(1);
  lattice_cmd->fallthrough();
  auto* info_cmd = lattice_cmd->add_subcommand("info", "invariants and discriminant data");
  info_cmd->fallthrough();
  std::string lattice_spec;
  info_cmd->add_option("spec", lattice_spec, "builtin name or lattice JSON file")->required();

  auto* wall_cmd = app.add_subcommand("wall", "wall-divisor criteria");
  wall_cmd->require_subcommand(1);
  wall_cmd->fallthrough();
  std::string v_path, d_path;
  for (const char* name : {"bm", "yoshioka", "mz"}) {
    auto* sub = wall_cmd->add_subcommand(name);
    sub->fallthrough();
    sub->add_option("--v", v_path, "vector JSON (the positive-square class)")->required();
    sub->add_option("--d", d_path, "vector JSON (the candidate divisor)")->required();
  }

  auto* orbit_cmd = app.add_subcommand("orbit", "Eichler-criterion orbit tools");
  orbit_cmd->require_subcommand(1);
  orbit_cmd->fallthrough();
  std::string x_path, y_path;
  for (const char* name : {"check", "map"}) {
    auto* sub = orbit_cmd->add_subcommand(name);
    sub->fallthrough();
    sub->add_option("--x", x_path, "vector JSON")->required();
    sub->add_option("--y", y_path, "vector JSON")->required();
  }

  auto* mon_cmd = app.add_subcommand("mon", "monodromy membership");
  mon_cmd->require_subcommand(1);
  mon_cmd->fallthrough();
  auto* mon_check = mon_cmd->add_subcommand("check");
  mon_check->fallthrough();
  long mon_n = 0;
  std::string mon_iso;
  mon_check->add_option("--n", mon_n, "Kummer parameter")->required();
  mon_check->add_option("--isometry", mon_iso, "isometry JSON")->required();

  auto* scenario_cmd = app.add_subcommand("scenario", "end-to-end certificates");
  scenario_cmd->require_subcommand(1);
  scenario_cmd->fallthrough();
  auto* kp = scenario_cmd->add_subcommand("kummer-proof");
  kp->fallthrough();
  long kp_n = 0;
  long kp_sample = 0;
  std::string kp_iso;
  kp->add_option("--n", kp_n, "Kummer parameter")->required();
  kp->add_option("--isometry", kp_iso, "isometry JSON (default for n=5: shipped fixture)");
  kp->add_option("--sample", kp_sample, "trace K sampled isometries instead");
  auto* og = scenario_cmd->add_subcommand("og10");
  og->fallthrough();
  std::string og_fixture, og_embedding, og_f;
  og->add_option("--fixture", og_fixture, "ambient lattice JSON (default: built-in)");
  og->add_option("--embedding", og_embedding, "w-perp embedding JSON {matrix: [[...]]}");
  og->add_option("--F", og_f, "candidate f vector JSON (default: searched in E8(-1))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (info_cmd->parsed()) return cmd_lattice_info(o, lattice_spec);
    if (wall_cmd->parsed())
      for (const char* name : {"bm", "yoshioka", "mz"})
        if (wall_cmd->get_subcommand(name)->parsed()) return cmd_wall(o, name, v_path, d_path);
    if (orbit_cmd->parsed()) {
      if (orbit_cmd->get_subcommand("check")->parsed()) return cmd_orbit_check(o, x_path, y_path);
      return cmd_orbit_map(o, x_path, y_path);
    }
    if (mon_check->parsed()) return cmd_mon_check(o, mon_n, mon_iso);
    if (kp->parsed()) return cmd_kummer_proof(o, kp_n, kp_iso, kp_sample);
    if (og->parsed()) return cmd_og10(o, og_fixture, og_embedding, og_f);
    std::cerr << "error: no command selected\n";
    return kExitError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::NotEquivalent) return kExitNegative;
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
