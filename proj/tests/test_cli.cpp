#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "wallkit/json_io.hpp"

using namespace wallkit;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

const std::string& binary() {
  static std::string bin = [] {
    if (const char* env = std::getenv("WALLKIT_BIN")) return std::string(env);
#ifdef WALLKIT_BIN
    return std::string(WALLKIT_BIN);
#else
    return std::string("./wallkit");
#endif
  }();
  return bin;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += "'" + binary() + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {};
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, got);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const std::string& scratch_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/wallkit_cli_XXXXXX";
    const char* d = mkdtemp(tmpl);
    return std::string(d ? d : "/tmp");
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = scratch_dir() + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string write_json(const std::string& name, const Json& j) {
  return write_file(name, j.dump(2) + "\n");
}

// {"lattice": "mukai_k3", "coords": [r; 22 middle entries; s]} with sparse entries
Json mukai_vector(const std::vector<std::pair<int, long>>& entries) {
  Json coords = Json::array();
  for (int i = 0; i < 24; ++i) coords.push_back(0);
  for (const auto& [i, v] : entries) coords[i] = v;
  return Json{{"lattice", "mukai_k3"}, {"coords", coords}};
}

bool is_hash(const Json& j) {
  if (!j.is_string()) return false;
  std::string s = j.get<std::string>();
  if (s.rfind("fnv1a64:", 0) != 0 || s.size() != 8 + 16) return false;
  for (size_t i = 8; i < s.size(); ++i)
    if (!std::isxdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Json u2_lattice() {
  return Json{{"label", "U2"},
              {"gram", Json::array({Json::array({0, 1, 0, 0}), Json::array({1, 0, 0, 0}),
                                    Json::array({0, 0, 0, 1}), Json::array({0, 0, 1, 0})})}};
}

}  // namespace

TEST_CASE("lattice info on builtins") {
  RunResult r = run_cli("lattice info U");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("tool") == "wallkit 0.1.0");
  CHECK(j.at("command") == "lattice info");
  CHECK(j.at("inputs").empty());
  const Json& rep = j.at("report");
  CHECK(rep.at("label") == "U");
  CHECK(rep.at("rank") == 2);
  CHECK(rep.at("det") == -1);
  CHECK(rep.at("even") == true);
  CHECK(rep.at("signature") == Json::array({1, 1}));
  CHECK(rep.at("disc") == Json::array());
  CHECK(rep.at("q") == Json::array());
  CHECK(rep.at("disc_order") == 1);

  Json k = Json::parse(run_cli("lattice info 'kummer(5)'").out);
  CHECK(k.at("report").at("disc") == Json::array({12}));
  CHECK(k.at("report").at("q") == Json::array({"23/12 ≡ -1/12"}));
  CHECK(k.at("report").at("signature") == Json::array({3, 4}));
}

TEST_CASE("lattice info on a gram file") {
  Json gram = Json::array();
  int u_blocks[3][2] = {{0, 1}, {2, 3}, {4, 5}};
  for (int i = 0; i < 7; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 7; ++j) row.push_back(0);
    gram.push_back(row);
  }
  for (auto& b : u_blocks) {
    gram[b[0]][b[1]] = 1;
    gram[b[1]][b[0]] = 1;
  }
  gram[6][6] = -12;
  std::string path = write_json("kummer5_file.json", Json{{"label", "kummer5-file"}, {"gram", gram}});

  RunResult r = run_cli("lattice info " + path);
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("report").at("label") == "kummer5-file");
  CHECK(j.at("report").at("disc") == Json::array({12}));
  CHECK(j.at("report").at("q") == Json::array({"23/12 ≡ -1/12"}));
  REQUIRE(j.at("inputs").contains("lattice"));
  CHECK(is_hash(j.at("inputs").at("lattice")));
}

TEST_CASE("lattice info error paths") {
  std::string bad = write_file("garbage.json", "{oops");
  RunResult r = run_cli("lattice info " + bad);
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(run_cli("lattice info /nonexistent/nowhere.json").code == 1);
}

TEST_CASE("wall criteria commands") {
  std::string v1 = write_json("v1.json", mukai_vector({{0, 1}, {23, -1}}));
  std::string d1 = write_json("d1.json", mukai_vector({{0, 1}, {23, 1}}));

  RunResult r = run_cli("wall bm --v " + v1 + " --d " + d1);
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("command") == "wall bm");
  CHECK(is_hash(j.at("inputs").at("v")));
  CHECK(is_hash(j.at("inputs").at("d")));
  const Json& rep = j.at("report");
  CHECK(rep.at("criterion") == "bm");
  CHECK(rep.at("is_wall") == true);
  CHECK(rep.at("clause") == "BM1");
  CHECK(rep.at("T_gram") == Json::array({Json::array({2, 1}), Json::array({1, 0})}));
  CHECK(rep.at("witness_T_coords") == Json::array({-1, 2}));
  CHECK(rep.at("witness") == mukai_vector({{0, 1}, {23, 1}}).at("coords"));

  // canonical serialization round-trips byte-identically
  CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
  CHECK(run_cli("wall bm --v " + v1 + " --d " + d1).out == r.out);

  std::string v2 = write_json("v2.json", mukai_vector({{0, 1}, {23, -2}}));
  std::string d2 = write_json("d2.json", mukai_vector({{1, 1}, {2, -1}}));
  RunResult y = run_cli("wall yoshioka --v " + v2 + " --d " + d2);
  CHECK(y.code == 3);
  Json yj = Json::parse(y.out);
  CHECK(yj.at("report").at("is_wall") == false);
  CHECK(yj.at("report").at("clause") == "none");
  CHECK(yj.at("report").at("witness").is_null());

  // mz requires square 2
  CHECK(run_cli("wall mz --v " + v2 + " --d " + d2).code == 1);
  // malformed vector file
  std::string bad = write_file("badvec.json", "not json");
  CHECK(run_cli("wall bm --v " + bad + " --d " + d1).code == 1);
}

TEST_CASE("orbit commands") {
  Json lat = u2_lattice();
  std::string x = write_json("x.json", Json{{"lattice", lat}, {"coords", {3, 5, 0, 0}}});
  std::string y = write_json("y.json", Json{{"lattice", lat}, {"coords", {1, 15, 0, 0}}});
  std::string z = write_json("z.json", Json{{"lattice", lat}, {"coords", {1, 1, 0, 0}}});

  RunResult c = run_cli("orbit check --x " + x + " --y " + y);
  REQUIRE(c.code == 0);
  Json cj = Json::parse(c.out);
  CHECK(cj.at("report").at("equivalent") == true);
  CHECK(cj.at("report").at("square_x") == 30);
  CHECK(cj.at("report").at("div_x") == 1);
  CHECK(cj.at("report").at("disc_image_x") == Json::array());

  CHECK(run_cli("orbit check --x " + x + " --y " + z).code == 3);

  RunResult m = run_cli("orbit map --x " + x + " --y " + y);
  REQUIRE(m.code == 0);
  Json mj = Json::parse(m.out);
  CHECK(mj.at("report").at("verified") == true);
  CHECK(mj.at("report").at("det") == 1);
  CHECK(mj.at("report").at("orientation") == 1);

  // inequivalent vectors: negative exit, not a crash
  CHECK(run_cli("orbit map --x " + x + " --y " + z).code == 3);
}

TEST_CASE("monodromy membership command") {
  std::string fixture = fixture_dir() + "/kummer5_times5.json";
  RunResult r = run_cli("mon check --n 5 --isometry " + fixture);
  CHECK(r.code == 3);
  Json j = Json::parse(r.out);
  CHECK(j.at("report").at("member") == false);
  CHECK(j.at("report").at("chi") == "other");
  CHECK(j.at("report").at("n") == 5);
  CHECK(is_hash(j.at("inputs").at("isometry")));

  Json id7{{"lattice", "kummer(2)"}, {"matrix", Json::array()}};
  for (int i = 0; i < 7; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 7; ++k) row.push_back(i == k ? 1 : 0);
    id7["matrix"].push_back(row);
  }
  std::string wrong = write_json("iso_k2.json", id7);
  CHECK(run_cli("mon check --n 5 --isometry " + wrong).code == 1);
  CHECK(run_cli("mon check --n 2 --isometry " + wrong).code == 0);
}

TEST_CASE("kummer-proof scenario") {
  RunResult r = run_cli("scenario kummer-proof --n 5");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("command") == "scenario kummer-proof");
  const Json& rep = j.at("report");
  CHECK(rep.at("n") == 5);
  CHECK(rep.at("count") == 1);
  const Json& tr = rep.at("traces").at(0);
  CHECK(tr.at("k") == 5);
  CHECK(tr.at("k_mod") == 5);
  CHECK(tr.at("pell_ok") == true);
  CHECK(tr.at("image_type") == "II");
  CHECK(tr.at("image_div") == 12);
  CHECK(tr.at("membership").at("member") == false);
  CHECK(is_hash(j.at("inputs").at("isometry")));

  RunResult s = run_cli("scenario kummer-proof --n 2 --sample 50 --seed 7");
  REQUIRE(s.code == 0);
  Json sj = Json::parse(s.out);
  CHECK(sj.at("report").at("count") == 50);
  CHECK(sj.at("report").at("seed") == 7);
  REQUIRE(sj.at("report").at("traces").size() == 50);
  for (const Json& t : sj.at("report").at("traces")) {
    CHECK(t.at("pell_ok") == true);
    long k_mod = t.at("k_mod").get<long>();
    CHECK((k_mod == 1 || k_mod == 5));
  }
  // same seed, same bytes
  CHECK(run_cli("scenario kummer-proof --n 2 --sample 50 --seed 7").out == s.out);

  CHECK(run_cli("scenario kummer-proof --n 2").code == 1);  // no fixture beyond n = 5
}

TEST_CASE("og10 scenario") {
  RunResult r = run_cli("scenario og10");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  const Json& rep = j.at("report");
  CHECK(rep.at("all_checks_pass") == true);
  REQUIRE(rep.at("checks").size() == 16);
  for (const Json& c : rep.at("checks")) CHECK(c.at("ok") == true);
  CHECK(rep.at("trivial_f") == false);
  CHECK(rep.at("d") == Json::parse(R"([3,2,2,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,3])"));
  CHECK(rep.at("d_hat").at(0) == 2);
  CHECK(rep.at("d_hat").at(1) == 2);
  CHECK(rep.at("d_hat").at(22) == 3);
  CHECK(rep.at("d_div_wperp") == 2);
  CHECK(rep.at("d_hat_div") == 1);
  CHECK(rep.at("g_det") == 1);
  CHECK(rep.at("g_orientation") == 1);
  CHECK(rep.at("premise").get<std::string>().rfind("cited premise, not computed:", 0) == 0);
  CHECK(run_cli("scenario og10").out == r.out);

  // bare-coords f with the wrong square
  Json badf{{"coords", Json::array()}};
  for (int i = 0; i < 24; ++i) badf["coords"].push_back(0);
  badf["coords"][0] = 1;
  badf["coords"][1] = -4;  // square -8
  CHECK(run_cli("scenario og10 --F " + write_json("badf.json", badf)).code == 1);

  Json shortf{{"coords", {1, 2, 3}}};
  CHECK(run_cli("scenario og10 --F " + write_json("shortf.json", shortf)).code == 1);

  // full-vector f equal to d_hat: accepted, flagged trivial
  auto u = standard_lattice("U");
  auto e8n = standard_lattice("E8(-1)");
  auto ambient = direct_sum({u, u, u, e8n, e8n, standard_lattice("A2(-1)")}, "og10");
  Json full{{"lattice", lattice_to_json(ambient)}, {"coords", rep.at("d_hat")}};
  RunResult t = run_cli("scenario og10 --F " + write_json("fullf.json", full));
  REQUIRE(t.code == 0);
  CHECK(Json::parse(t.out).at("report").at("trivial_f") == true);

  // substituted fixture files equivalent to the builtin
  std::string fixture = write_json("og10_ambient.json", lattice_to_json(ambient));
  Json iota{{"matrix", Json::array()}};
  for (int i = 0; i < 24; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 23; ++k) row.push_back(i == k ? 1 : 0);
    iota["matrix"].push_back(row);
  }
  std::string emb = write_json("og10_embedding.json", iota);
  RunResult sub = run_cli("scenario og10 --fixture " + fixture + " --embedding " + emb);
  REQUIRE(sub.code == 0);
  Json subj = Json::parse(sub.out);
  CHECK(subj.at("report").at("all_checks_pass") == true);
  CHECK(subj.at("inputs").size() == 2);

  CHECK(run_cli("scenario og10 --fixture " + fixture).code == 1);  // missing --embedding
}

TEST_CASE("output and format options") {
  RunResult t = run_cli("--format text lattice info U");
  REQUIRE(t.code == 0);
  CHECK(t.out == "U: rank 2, det -1, signature (1,1), even, disc order 1\n");

  std::string out_path = scratch_dir() + "/report_out.json";
  RunResult w = run_cli("--output " + out_path + " lattice info U");
  REQUIRE(w.code == 0);
  CHECK(w.out.empty());
  std::ifstream in(out_path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(Json::parse(content).at("command") == "lattice info");
}

TEST_CASE("fixture directory override") {
  CHECK(run_cli("lattice info E8", "WALLKIT_FIXTURES=/nonexistent").code == 1);
  CHECK(run_cli("lattice info E8", "WALLKIT_FIXTURES='" + fixture_dir() + "'").code == 0);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("wall").code == 1);
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("--format yaml lattice info U").code == 1);
}
