#include <doctest.h>

#include <set>
#include <sstream>
#include <string>

#include "strata/report.hpp"

using namespace strata;
using namespace strata::report;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_req(ReportRequest req) {
  std::ostringstream out, err;
  const int code = run(req, out, err);
  return {code, out.str(), err.str()};
}

ReportRequest base(Artifact a, std::set<int> level = {0, 1}) {
  ReportRequest req;
  req.g = 2;
  req.level = std::move(level);
  req.artifact = a;
  return req;
}

}  // namespace

TEST_CASE("ekor table at Klingen level has 8 rows") {
  const Run r = run_req(base(Artifact::ekor));
  CHECK(r.code == 0);
  int rows = 0;
  std::istringstream is(r.out);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line.front() == '|' && line.find("---") == std::string::npos &&
        line.find("element") == std::string::npos)
      ++rows;
  CHECK(rows == 8);
  CHECK(r.out.find("s0 s1 s0 tau") != std::string::npos);
}

TEST_CASE("adm json lists 13 elements") {
  ReportRequest req = base(Artifact::adm, {0, 1, 2});
  req.format = Format::json_fmt;
  const Run r = run_req(req);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("elements").size() == 13);
  CHECK(j.at("maximals").size() == 4);
}

TEST_CASE("summary line at paramodular level") {
  const Run r = run_req(base(Artifact::summary, {1}));
  CHECK(r.code == 0);
  CHECK(r.out == "5 EKOR strata, 2 KR strata, 3 Newton classes, components: 1\n");
}

TEST_CASE("dot output is restricted to hasse artifacts") {
  ReportRequest req = base(Artifact::adm);
  req.format = Format::dot;
  const Run r = run_req(req);
  CHECK(r.code == 2);
  ReportRequest ok = base(Artifact::hasse_ekor);
  ok.format = Format::dot;
  const Run r2 = run_req(ok);
  CHECK(r2.code == 0);
  CHECK(r2.out.find("digraph") == 0);
}

TEST_CASE("level validation") {
  const Run bad = run_req(base(Artifact::ekor, {0, 7}));
  CHECK(bad.code == 2);
  const Run empty = run_req(base(Artifact::ekor, {}));
  CHECK(empty.code == 2);
}

TEST_CASE("cap exceeded maps to exit 3") {
  ReportRequest req = base(Artifact::adm, {0, 1, 2});
  req.cap_override = 1;  // below l(t^mu) = 3
  const Run r = run_req(req);
  CHECK(r.code == 3);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("selfcheck passes and is deterministic") {
  ReportRequest req = base(Artifact::selfcheck, {0, 1, 2});
  const Run r1 = run_req(req);
  const Run r2 = run_req(req);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("selfcheck OK") != std::string::npos);
  CHECK(r1.out.find("MISMATCH") == std::string::npos);
  ReportRequest g3 = req;
  g3.g = 3;
  CHECK(run_req(g3).code == 2);  // no reference tables at g = 3
}

TEST_CASE("hasse-ekor honors the order flag") {
  ReportRequest ks = base(Artifact::hasse_ekor);
  const Run r_ks = run_req(ks);
  ReportRequest br = base(Artifact::hasse_ekor);
  br.order = OrderKind::bruhat;
  const Run r_br = run_req(br);
  CHECK(r_ks.code == 0);
  CHECK(r_br.code == 0);
  // The Klingen EKOR order strictly refines Bruhat: one extra cover edge.
  CHECK(r_ks.out.find("s0 tau -> s1 s2 tau") != std::string::npos);
  CHECK(r_br.out.find("s0 tau -> s1 s2 tau") == std::string::npos);
}

TEST_CASE("window notation") {
  ReportRequest req = base(Artifact::ekor, {0});
  req.notation = Notation::window;
  const Run r = run_req(req);
  CHECK(r.code == 0);
  CHECK(r.out.find("(3,4,5,6)") != std::string::npos);  // tau's window
}

TEST_CASE("json schema is versioned and exact about rationals") {
  const std::string schema = json_schema();
  const auto j = nlohmann::json::parse(schema);
  CHECK(j.at("schema_version") == 1);
  CHECK(schema.find("1/2") != std::string::npos);
  CHECK(j.at("constraints").at("level") == "nonempty subset of 0..g");
}

TEST_CASE("zip and newton artifacts render") {
  const Run zip = run_req(base(Artifact::zip, {0, 2}));
  CHECK(zip.code == 0);
  CHECK(zip.out.find("s0 s2 tau") != std::string::npos);
  ReportRequest nj = base(Artifact::newton, {0, 1});
  nj.format = Format::json_fmt;
  const Run r = run_req(nj);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("classes").size() == 3);
  CHECK(j.at("fully_hodge_newton_decomposable") == true);
  CHECK(j.at("classes")[0].at("nu")[0] == "1/2");
}
