#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sl2rep/cli.hpp"
#include "sl2rep/json_io.hpp"
#include "sl2rep/weeks.hpp"

using namespace sl2rep;

TEST_CASE("schema version is constant and embedded") {
  CHECK(report_schema_version() == "1.0.0");
  json j{{"schema", report_schema_version()}};
  CHECK(j["schema"] == "1.0.0");
}

TEST_CASE("canonical dump: sorted keys, 17 significant digits, stable") {
  json j{{"zeta", 0.1}, {"alpha", 1.0 / 3.0}, {"mid", json::array({1, 2.5, "x"})}};
  std::string s = canonical_dump(j);
  CHECK(s.find("\"alpha\"") < s.find("\"mid\""));
  CHECK(s.find("\"mid\"") < s.find("\"zeta\""));
  CHECK(s.find("0.33333333333333331") != std::string::npos);
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  CHECK(canonical_dump(j) == s);
}

TEST_CASE("representation JSON round trip") {
  Representation geo = weeks_geometric(0);
  json j = representation_to_json(geo);
  Representation back = representation_from_json(j);
  CHECK(back.presentation == geo.presentation);
  for (std::size_t i = 0; i < geo.images.size(); ++i)
    CHECK(distance(back.images[i].m, geo.images[i].m) < 1e-15);
  CHECK(back.residual == doctest::Approx(geo.residual).epsilon(1e-6));
}

TEST_CASE("verdict and drift serialization carries certificates") {
  const Presentation& p = weeks_presentation();
  Representation geo = weeks_geometric(0);
  Verdict v = admissibility_verdict(p, geo, trivial_representation(p), 3);
  json j = to_json(v);
  CHECK(j["verdict"] == "AdmissibleCertified");
  CHECK(j.contains("hermitian_certificate"));

  Verdict nv = admissibility_verdict(p, geo, geo, 3);
  json nj = to_json(nv);
  CHECK(nj["verdict"] == "NotAdmissibleCertified");
  CHECK(nj.contains("conjugacy_certificate"));
}

TEST_CASE("weeks-demo reports are byte-identical across runs") {
  auto run = [](const std::string& path) {
    std::ostringstream out, err;
    int rc = run_cli({"weeks-demo", "--ball", "4", "--json", path}, out, err);
    REQUIRE(rc == 0);
    std::ifstream in(path);
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
  };
  std::string a = run("/tmp/sl2rep_demo_a.json");
  std::string b = run("/tmp/sl2rep_demo_b.json");
  CHECK(!a.empty());
  CHECK(a == b);
  json parsed = json::parse(a);
  CHECK(parsed["schema"] == report_schema_version());
  CHECK(parsed["abelian"]["count"] == 25);
}

TEST_CASE("cli: parse errors exit 1 with a position") {
  std::ostringstream out, err;
  std::ofstream f("/tmp/sl2rep_bad.txt");
  f << "a | a^0";
  f.close();
  int rc = run_cli({"parse", "/tmp/sl2rep_bad.txt"}, out, err);
  CHECK(rc == 1);
  CHECK(err.str().find("position") != std::string::npos);
}

TEST_CASE("cli: cohomology of Z at diag(2, 1/2)") {
  {
    std::ofstream f("/tmp/sl2rep_z.txt");
    f << "t |";
  }
  {
    Representation z = make_representation(parse_presentation("t |"),
                                           {make_sl2({2.0, 0.0, 0.0, 0.5})});
    std::ofstream f("/tmp/sl2rep_zrep.json");
    f << canonical_dump(representation_to_json(z));
  }
  std::ostringstream out, err;
  int rc = run_cli({"cohomology", "/tmp/sl2rep_z.txt", "--rep", "/tmp/sl2rep_zrep.json",
                    "--json", "/tmp/sl2rep_zcoh.json"},
                   out, err);
  CHECK(rc == 0);
  json j = json::parse(std::ifstream("/tmp/sl2rep_zcoh.json"));
  CHECK(j["report"]["dim_Z1"] == 3);
  CHECK(j["report"]["dim_B1"] == 2);
  CHECK(j["report"]["dim_H1"] == 1);
  CHECK(j["report"]["dim_centralizer"] == 1);
}

TEST_CASE("cli: admissible subcommand exit codes") {
  {
    std::ofstream f("/tmp/sl2rep_z2.txt");
    f << "t |";
  }
  auto dump_rep = [](const Representation& r, const std::string& path) {
    std::ofstream f(path);
    f << canonical_dump(representation_to_json(r));
  };
  Presentation z = parse_presentation("t |");
  dump_rep(make_representation(z, {make_sl2({2.0, 0.0, 0.0, 0.5})}), "/tmp/sl2rep_ref.json");
  dump_rep(make_representation(z, {make_sl2({5.0, 0.0, 0.0, 0.2})}), "/tmp/sl2rep_fast.json");
  std::ostringstream out, err;
  int rc = run_cli({"admissible", "/tmp/sl2rep_z2.txt", "--rep", "/tmp/sl2rep_fast.json",
                    "--ref", "/tmp/sl2rep_ref.json", "--ball", "5"},
                   out, err);
  CHECK(rc == 2);  // Inconclusive is distinct from failure
}
