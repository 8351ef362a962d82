#include "wallkit/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wallkit {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<int64_t>(v.get_si());
  return v.get_str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::ParseError, "not an integer literal: " + j.get<std::string>());
    }
  }
  fail(ErrorCode::ParseError, "expected an integer (number or decimal string)");
}

Json rat_to_json(const Rat& v) { return v.get_str(); }

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

IntVec vec_from_json(const Json& j) {
  require(j.is_array(), ErrorCode::ParseError, "expected an array of integers");
  IntVec v;
  v.reserve(j.size());
  for (const Json& x : j) v.push_back(int_from_json(x));
  return v;
}

Json mat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat mat_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), ErrorCode::ParseError, "expected a non-empty matrix");
  int rows = static_cast<int>(j.size());
  require(j.at(0).is_array(), ErrorCode::ParseError, "matrix rows must be arrays");
  int cols = static_cast<int>(j.at(0).size());
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    require(row.is_array() && static_cast<int>(row.size()) == cols, ErrorCode::ParseError,
            "ragged matrix rows");
    for (int k = 0; k < cols; ++k) m.at(i, k) = int_from_json(row.at(k));
  }
  return m;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::ParseError, "cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  require(!j.is_discarded(), ErrorCode::ParseError, "malformed JSON in " + path);
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::ParseError, "cannot open " + path + " for writing");
  out << content;
  require(out.good(), ErrorCode::ParseError, "write failed: " + path);
}

IntMat load_gram_fixture(const std::string& filename) {
  std::string path = fixture_dir() + "/" + filename;
  Json j = load_json_file(path);
  require(j.contains("gram"), ErrorCode::ParseError, "fixture " + path + " lacks a gram field");
  return mat_from_json(j.at("gram"));
}

LatticePtr lattice_from_json(const Json& spec) {
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    try {
      return standard_lattice(name);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BadParam) throw;
    }
    Json file = load_json_file(name);
    require(file.is_object(), ErrorCode::ParseError, "lattice file must hold an object: " + name);
    return lattice_from_json(file);
  }
  require(spec.is_object() && spec.contains("gram"), ErrorCode::ParseError,
          "lattice spec must be a builtin name, a file path, or {label, gram}");
  std::string label = spec.value("label", "custom");
  return make_lattice(mat_from_json(spec.at("gram")), label);
}

Json lattice_to_json(const LatticePtr& l) {
  return Json{{"label", l->label()}, {"gram", mat_to_json(l->gram())}};
}

LatticeVector vector_from_json(const Json& j) {
  require(j.is_object() && j.contains("lattice") && j.contains("coords"), ErrorCode::ParseError,
          "vector JSON needs lattice and coords");
  LatticePtr l = lattice_from_json(j.at("lattice"));
  IntVec c = vec_from_json(j.at("coords"));
  require(static_cast<int>(c.size()) == l->rank(), ErrorCode::ParseError,
          "coords length does not match the lattice rank");
  return LatticeVector{std::move(l), std::move(c)};
}

Json vector_to_json(const LatticeVector& v) {
  return Json{{"lattice", v.lattice->label()}, {"coords", vec_to_json(v.coords)}};
}

Isometry isometry_from_json(const Json& j) {
  require(j.is_object() && j.contains("lattice") && j.contains("matrix"), ErrorCode::ParseError,
          "isometry JSON needs lattice and matrix");
  LatticePtr l = lattice_from_json(j.at("lattice"));
  return make_isometry(l, mat_from_json(j.at("matrix")));
}

Json isometry_to_json(const Isometry& g) {
  return Json{{"lattice", g.lattice->label()}, {"matrix", mat_to_json(g.matrix)}};
}

namespace {

// Generator square in [0, 2), plus the small representative in (-1, 1] when
// they differ: "23/12 ≡ -1/12".
std::string q_string(const Rat& v) {
  std::string s = v.get_str();
  if (v > 1) s += " ≡ " + Rat(v - 2).get_str();
  return s;
}

}  // namespace

Json disc_report(const DiscriminantGroup& g) {
  Json factors = Json::array();
  for (const Int& f : g.factors) factors.push_back(int_to_json(f));
  Json q = Json::array();
  for (const Rat& v : g.q_values) q.push_back(q_string(v));
  return Json{{"disc", std::move(factors)},
              {"q", std::move(q)},
              {"order", int_to_json(g.order)}};
}

Json lattice_report(const LatticePtr& l) {
  auto [pos, neg] = l->signature();
  Json dr = disc_report(discriminant_group(l));
  return Json{{"label", l->label()},
              {"rank", l->rank()},
              {"det", int_to_json(l->determinant())},
              {"even", l->is_even()},
              {"signature", Json::array({pos, neg})},
              {"disc", dr.at("disc")},
              {"q", dr.at("q")},
              {"disc_order", dr.at("order")}};
}

Json wall_report(const std::string& criterion, const WallVerdict& v) {
  Json j{{"criterion", criterion},
         {"is_wall", v.is_wall},
         {"clause", wall_clause_name(v.clause)},
         {"T_gram", mat_to_json(v.closure.gram)},
         {"T_basis", mat_to_json(v.closure.basis)}};
  if (v.witness.has_value()) {
    j["witness"] = vec_to_json(v.witness->coords);
    j["witness_T_coords"] = vec_to_json(*v.witness_coords);
  } else {
    j["witness"] = nullptr;
    j["witness_T_coords"] = nullptr;
  }
  return j;
}

Json mon_report(const MonVerdict& v) {
  return Json{{"member", v.member},
              {"orientation", v.orientation},
              {"chi", pm1_name(v.chi)},
              {"det", int_to_json(v.det)},
              {"reason", v.reason}};
}

Json trace_report(const KummerProofTrace& t) {
  Json j{{"n", t.n},
         {"k", int_to_json(t.k)},
         {"l", vec_to_json(t.l.coords)},
         {"pell_ok", t.pell_ok},
         {"t_integral", t.t_integral},
         {"t_prime_integral", t.t_prime_integral},
         {"k_mod", int_to_json(t.k_mod)},
         {"image_div", int_to_json(t.image_div)},
         {"image_wall", wall_report("yoshioka", t.image_wall)},
         {"membership", mon_report(t.membership)}};
  switch (t.image_type.type) {
    case ContractionType::TypeI: j["image_type"] = "I"; break;
    case ContractionType::TypeII: j["image_type"] = "II"; break;
    case ContractionType::None: j["image_type"] = "none"; break;
  }
  j["image_type_witness"] =
      t.image_type.w.has_value() ? vec_to_json(t.image_type.w->coords) : Json(nullptr);
  return j;
}

Json og10_report(const OG10Certificate& c) {
  Json checks = Json::array();
  for (const auto& [name, ok] : c.checks) checks.push_back(Json{{"name", name}, {"ok", ok}});
  return Json{{"w", vec_to_json(c.w.coords)},
              {"s", vec_to_json(c.s.coords)},
              {"d", vec_to_json(c.d.coords)},
              {"d_wall", wall_report("mz", c.d_wall)},
              {"d_div_wperp", int_to_json(c.d_div_wperp)},
              {"d_hat", vec_to_json(c.d_hat.coords)},
              {"d_hat_div", int_to_json(c.d_hat_div)},
              {"f", vec_to_json(c.f.coords)},
              {"f_div", int_to_json(c.f_div)},
              {"g", mat_to_json(c.g.matrix)},
              {"g_det", int_to_json(determinant(c.g))},
              {"g_orientation", orientation_sign(c.g)},
              {"trivial_f", c.trivial_f},
              {"checks", std::move(checks)},
              {"all_checks_pass", c.all_checks_pass},
              {"premise", c.premise}};
}

namespace {

std::string hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::ParseError, "cannot open " + path + " for hashing");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  uint64_t h = fnv1a64(bytes.data(), bytes.size());
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + out;
}

}  // namespace

Json report_envelope(const std::string& command,
                     const std::vector<std::pair<std::string, std::string>>& input_files,
                     Json body) {
  Json inputs = Json::object();
  for (const auto& [name, path] : input_files) inputs[name] = hash_file(path);
  return Json{{"tool", kToolVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"report", std::move(body)}};
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wallkit
