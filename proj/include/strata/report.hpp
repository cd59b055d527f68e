#pragma once

#include <algorithm>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "strata/admissible.hpp"
#include "strata/gsp4_reference.hpp"
#include "strata/newton.hpp"
#include "strata/orders.hpp"
#include "strata/siegel_model.hpp"
#include "strata/stratum.hpp"
#include "strata/zipdata.hpp"

namespace strata {
namespace report {

using json = nlohmann::ordered_json;

enum class Artifact { adm, ekor, kr, hasse_ekor, hasse_kr, newton, zip, summary, selfcheck };
enum class Format { md, json_fmt, dot };
enum class Notation { word, window };
enum class OrderKind { ksigma, bruhat };

struct ReportRequest {
  std::string group = "gsp";
  int g = 2;
  std::set<int> level;
  Artifact artifact = Artifact::summary;
  Format format = Format::md;
  Notation notation = Notation::word;
  OrderKind order = OrderKind::ksigma;
  int cap_override = -1;
};

inline bool parse_artifact(const std::string& s, Artifact& out) {
  if (s == "adm") out = Artifact::adm;
  else if (s == "ekor") out = Artifact::ekor;
  else if (s == "kr") out = Artifact::kr;
  else if (s == "hasse-ekor") out = Artifact::hasse_ekor;
  else if (s == "hasse-kr") out = Artifact::hasse_kr;
  else if (s == "newton") out = Artifact::newton;
  else if (s == "zip") out = Artifact::zip;
  else if (s == "summary") out = Artifact::summary;
  else if (s == "selfcheck") out = Artifact::selfcheck;
  else return false;
  return true;
}

inline std::string window_str(const Elt& e) {
  std::string s = "(";
  const auto& w = e.perm.window();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

inline std::string elt_str(const GroupCtx& ctx, const Elt& e, Notation n) {
  return n == Notation::word ? element_label(ctx, e) : window_str(e);
}

inline json elt_json(const GroupCtx& ctx, const Elt& e) {
  json j;
  const Word w = ctx.reduced_word_unbounded(e.perm);
  j["word"] = w.letters;
  j["omega"] = w.omega;
  j["window"] = e.perm.window();
  j["length"] = ctx.length_unbounded(e.perm);
  j["p_rank"] = p_rank(e);
  j["kappa"] = e.perm.kappa();
  return j;
}

inline json poset_json(const Poset& p) {
  json nodes = json::array();
  for (const auto& n : p.nodes) {
    json jn;
    jn["word"] = n.label;
    jn["dim"] = n.dim;
    if (n.p_rank) jn["p_rank"] = *n.p_rank;
    nodes.push_back(jn);
  }
  json covers = json::array();
  for (const auto& [lo, hi] : p.covers) covers.push_back({lo, hi});
  json j;
  j["nodes"] = nodes;
  j["covers"] = covers;
  return j;
}

// The versioned schema of every JSON artifact the CLI emits.
inline std::string json_schema() {
  json j;
  j["schema_version"] = 1;
  j["conventions"] = {
      {"rationals", "exact, serialized as strings like \"1/2\""},
      {"words", "generator indices; omega counts powers of the length-zero generator tau"},
      {"sorting", "elements sorted by (length, lexicographic word)"}};
  j["element"] = {{"word", "array of int"},
                  {"omega", "int"},
                  {"window", "array of int (affine similitude permutation window)"},
                  {"length", "int"},
                  {"p_rank", "int"},
                  {"kappa", "int"}};
  j["poset"] = {{"nodes", "array of {word, dim, p_rank?}"},
                {"covers", "array of [lower_index, upper_index]"}};
  j["newton_class"] = {{"nu", "array of rational strings (dominant)"},
                       {"kappa", "int"},
                       {"basic", "bool"},
                       {"straight_rep", "element"},
                       {"leaf_dim", "int"}};
  j["artifacts"] = {"adm", "ekor", "kr", "hasse-ekor", "hasse-kr",
                    "newton", "zip", "summary", "selfcheck"};
  j["constraints"] = {{"level", "nonempty subset of 0..g"},
                      {"format dot", "hasse-ekor and hasse-kr only"}};
  return j.dump(2) + "\n";
}

struct LevelData {
  std::shared_ptr<GroupCtx> ctx;
  SiegelLevel level;
  Parahoric K;
  AdmissibleSet adm;
};

inline LevelData build_level(const ReportRequest& req) {
  auto ctx = gsp_context(req.g, req.cap_override);
  SiegelLevel level(req.level);
  Parahoric K(*ctx, level_to_parahoric_gens(req.g, level));
  AdmissibleSet adm = admissible_set(*ctx, ctx->mu());
  return LevelData{ctx, level, std::move(K), std::move(adm)};
}

inline json request_header(const ReportRequest& req, const char* artifact) {
  json j;
  j["schema_version"] = 1;
  j["group"] = req.group;
  j["g"] = req.g;
  j["level"] = std::vector<int>(req.level.begin(), req.level.end());
  j["artifact"] = artifact;
  return j;
}

inline void emit_adm(const ReportRequest& req, const LevelData& d, std::ostream& out) {
  const GroupCtx& ctx = *d.ctx;
  if (req.format == Format::json_fmt) {
    json j = request_header(req, "adm");
    json elems = json::array();
    for (const Elt& x : d.adm.elements) elems.push_back(elt_json(ctx, x));
    j["elements"] = elems;
    json maxima = json::array();
    for (const Elt& t : d.adm.maximals) maxima.push_back(elt_json(ctx, t));
    j["maximals"] = maxima;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# admissible set (g = " << req.g << ")\n\n";
  out << "| element | length | p-rank | kappa |\n";
  out << "|---|---|---|---|\n";
  for (const Elt& x : d.adm.elements) {
    out << "| " << elt_str(ctx, x, req.notation) << " | " << ctx.length(x)
        << " | " << p_rank(x) << " | " << x.perm.kappa() << " |\n";
  }
  out << "\n" << d.adm.elements.size() << " elements; maximal translations:";
  for (const Elt& t : d.adm.maximals)
    out << " " << elt_str(ctx, t, req.notation) << ";";
  out << "\n";
}

inline void emit_ekor(const ReportRequest& req, const LevelData& d, std::ostream& out) {
  const GroupCtx& ctx = *d.ctx;
  const std::vector<StratumRecord> records = decorate(ctx, d.adm, d.K);
  if (req.format == Format::json_fmt) {
    json j = request_header(req, "ekor");
    json rows = json::array();
    for (const auto& r : records) {
      json jr;
      jr["element"] = elt_json(ctx, r.elt);
      jr["dim"] = r.dim;
      jr["p_rank"] = *r.p_rank;
      jr["kr_type"] = element_label(ctx, r.kr_type);
      jr["sigma_straight"] = r.sigma_straight;
      if (r.newton) {
        json nu = json::array();
        for (const Rat& c : r.newton->nu.nu) nu.push_back(c.str());
        jr["newton_nu"] = nu;
      }
      rows.push_back(jr);
    }
    j["strata"] = rows;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# EKOR strata (g = " << req.g << ", level {";
  bool first = true;
  for (int i : req.level) {
    if (!first) out << ",";
    out << i;
    first = false;
  }
  out << "})\n\n";
  out << "| element | dim | p-rank | KR type |\n";
  out << "|---|---|---|---|\n";
  for (const auto& r : records) {
    out << "| " << elt_str(ctx, r.elt, req.notation) << " | " << r.dim << " | "
        << *r.p_rank << " | " << elt_str(ctx, r.kr_type, req.notation) << " |\n";
  }
}

inline void emit_kr(const ReportRequest& req, const LevelData& d, std::ostream& out) {
  const GroupCtx& ctx = *d.ctx;
  const std::vector<Elt> reps = kr_set(ctx, d.adm, d.K);
  if (req.format == Format::json_fmt) {
    json j = request_header(req, "kr");
    json rows = json::array();
    for (const Elt& w : reps) {
      json jr;
      jr["kr_type"] = elt_json(ctx, w);
      jr["dim"] = ctx.length_unbounded(max_section_rep(ctx, d.K, w).perm);
      json fib = json::array();
      for (const Elt& x : kr_fiber(ctx, d.adm, d.K, w))
        fib.push_back(elt_json(ctx, x));
      jr["fiber"] = fib;
      jr["ordinary"] = element_label(ctx, ordinary_section(ctx, d.adm, d.K, w));
      jr["superspecial"] =
          element_label(ctx, superspecial_section(ctx, d.adm, d.K, w));
      rows.push_back(jr);
    }
    j["strata"] = rows;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# KR strata (g = " << req.g << ")\n\n";
  out << "| KR type | dim | fiber | dims | p-ranks | ordinary | superspecial |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const Elt& w : reps) {
    out << "| " << elt_str(ctx, w, req.notation) << " | "
        << ctx.length_unbounded(max_section_rep(ctx, d.K, w).perm) << " | ";
    const std::vector<Elt> fiber = kr_fiber(ctx, d.adm, d.K, w);
    for (std::size_t i = 0; i < fiber.size(); ++i)
      out << (i ? ", " : "") << elt_str(ctx, fiber[i], req.notation);
    out << " | ";
    for (std::size_t i = 0; i < fiber.size(); ++i)
      out << (i ? ", " : "") << ctx.length(fiber[i]);
    out << " | ";
    for (std::size_t i = 0; i < fiber.size(); ++i)
      out << (i ? ", " : "") << p_rank(fiber[i]);
    out << " | " << elt_str(ctx, ordinary_section(ctx, d.adm, d.K, w), req.notation)
        << " | "
        << elt_str(ctx, superspecial_section(ctx, d.adm, d.K, w), req.notation)
        << " |\n";
  }
}

inline void emit_poset(const ReportRequest& req, const LevelData& d, bool ekor_kind,
                       std::ostream& out) {
  const GroupCtx& ctx = *d.ctx;
  Poset p;
  if (ekor_kind)
    p = req.order == OrderKind::bruhat ? ekor_bruhat_poset(ctx, d.adm, d.K)
                                       : ekor_poset(ctx, d.adm, d.K);
  else
    p = bruhat_poset(ctx, d.adm, d.K);
  if (req.notation == Notation::window)
    for (auto& n : p.nodes) n.label = window_str(n.elt);
  if (req.format == Format::dot) {
    out << to_dot(p);
    return;
  }
  if (req.format == Format::json_fmt) {
    json j = request_header(req, ekor_kind ? "hasse-ekor" : "hasse-kr");
    j["order"] = ekor_kind && req.order == OrderKind::ksigma ? "ksigma" : "bruhat";
    j["poset"] = poset_json(p);
    out << j.dump(2) << "\n";
    return;
  }
  out << "# closure order (" << (ekor_kind ? "EKOR" : "KR") << ")\n\n";
  for (const auto& [lo, hi] : p.covers)
    out << p.nodes[static_cast<std::size_t>(lo)].label << " -> "
        << p.nodes[static_cast<std::size_t>(hi)].label << "\n";
  if (p.covers.empty()) out << "(single stratum)\n";
}

inline void emit_newton(const ReportRequest& req, const LevelData& d, std::ostream& out) {
  const GroupCtx& ctx = *d.ctx;
  const std::vector<BClass> classes = b_set(ctx, d.adm, d.K);
  const HnReport hn = fully_hn_decomposable(ctx, d.adm);
  if (req.format == Format::json_fmt) {
    json j = request_header(req, "newton");
    json rows = json::array();
    for (const BClass& c : classes) {
      json jc;
      json nu = json::array();
      for (const Rat& x : c.nu.nu) nu.push_back(x.str());
      jc["nu"] = nu;
      jc["kappa"] = c.kappa;
      jc["basic"] = c.basic;
      jc["straight_rep"] = elt_json(ctx, c.straight_rep);
      jc["leaf_dim"] = c.leaf_dim;
      rows.push_back(jc);
    }
    j["classes"] = rows;
    j["fully_hodge_newton_decomposable"] = hn.decomposable;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# Newton classes (g = " << req.g << ")\n\n";
  out << "| nu | kappa | basic | straight rep | leaf dim |\n";
  out << "|---|---|---|---|---|\n";
  for (const BClass& c : classes) {
    out << "| " << c.nu.str() << " | " << c.kappa << " | "
        << (c.basic ? "yes" : "no") << " | "
        << elt_str(ctx, c.straight_rep, req.notation) << " | " << c.leaf_dim
        << " |\n";
  }
  out << "\nfully Hodge-Newton decomposable: " << (hn.decomposable ? "yes" : "no")
      << "\n";
  for (const HnClassReport& c : hn.classes) {
    out << "  " << c.nu.str() << ": coefficients (";
    for (std::size_t i = 0; i < c.coefficients.size(); ++i)
      out << (i ? "," : "") << c.coefficients[i].str();
    out << ") zero orbit: " << (c.has_zero_orbit ? "yes" : "no") << "\n";
  }
}

inline void emit_zip(const ReportRequest& req, const LevelData& d, std::ostream& out) {
  const GroupCtx& ctx = *d.ctx;
  const std::vector<Elt> reps = kr_set(ctx, d.adm, d.K);
  if (req.format == Format::json_fmt) {
    json j = request_header(req, "zip");
    json rows = json::array();
    for (const Elt& w : reps) {
      const ZipDatum z = zip_datum(ctx, d.adm, d.K, w);
      json jz;
      jz["w"] = element_label(ctx, w);
      jz["Jw"] = z.Jw;
      jz["sigma_prime_Jw"] = z.sigma_prime_Jw;
      json fib = json::array();
      for (const Elt& x : z.fiber) fib.push_back(element_label(ctx, x));
      jz["fiber"] = fib;
      jz["eo_poset"] = poset_json(eo_poset_in_fiber(ctx, d.K, z));
      rows.push_back(jz);
    }
    j["zip_data"] = rows;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# zip data per KR type (g = " << req.g << ")\n\n";
  out << "| KR type | J_w | sigma'(J_w) | fiber | ordinary | superspecial |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const Elt& w : reps) {
    const ZipDatum z = zip_datum(ctx, d.adm, d.K, w);
    const auto [ordinary, superspecial] = ordinary_and_superspecial(ctx, d.K, z);
    out << "| " << elt_str(ctx, w, req.notation) << " | {";
    for (std::size_t i = 0; i < z.Jw.size(); ++i) out << (i ? "," : "") << z.Jw[i];
    out << "} | {";
    for (std::size_t i = 0; i < z.sigma_prime_Jw.size(); ++i)
      out << (i ? "," : "") << z.sigma_prime_Jw[i];
    out << "} | ";
    for (std::size_t i = 0; i < z.fiber.size(); ++i)
      out << (i ? ", " : "") << elt_str(ctx, z.fiber[i], req.notation);
    out << " | " << elt_str(ctx, ordinary, req.notation) << " | "
        << elt_str(ctx, superspecial, req.notation) << " |\n";
  }
}

inline void emit_summary(const ReportRequest& req, const LevelData& d, std::ostream& out) {
  const GroupCtx& ctx = *d.ctx;
  const std::size_t ekor = ekor_set(ctx, d.adm, d.K).size();
  const std::size_t kr = kr_set(ctx, d.adm, d.K).size();
  const std::size_t classes = b_set(ctx, d.adm, d.K).size();
  if (req.format == Format::json_fmt) {
    json j = request_header(req, "summary");
    j["ekor_strata"] = ekor;
    j["kr_strata"] = kr;
    j["newton_classes"] = classes;
    j["components"] = component_count(d.level);
    out << j.dump(2) << "\n";
    return;
  }
  out << ekor << " EKOR strata, " << kr << " KR strata, " << classes
      << " Newton classes, components: " << component_count(d.level) << "\n";
}

// --- selfcheck against the reference tables ---

inline std::vector<std::string> labels_of(const GroupCtx& ctx, const std::vector<Elt>& v) {
  std::vector<std::string> out;
  for (const Elt& e : v) out.push_back(element_label(ctx, e));
  return out;
}

inline std::vector<gsp4_reference::Edge> cover_labels(const Poset& p) {
  std::vector<gsp4_reference::Edge> out;
  for (const auto& [lo, hi] : p.covers)
    out.emplace_back(p.nodes[static_cast<std::size_t>(lo)].label,
                     p.nodes[static_cast<std::size_t>(hi)].label);
  std::sort(out.begin(), out.end());
  return out;
}

template <typename T>
void check_equal(const std::string& what, const T& expected, const T& got,
                 int& mismatches, std::ostream& out) {
  if (expected == got) {
    out << "ok: " << what << "\n";
  } else {
    ++mismatches;
    out << "MISMATCH: " << what << "\n";
    std::ostringstream e, g;
    auto dump = [](std::ostream& os, const T& v) {
      if constexpr (std::is_same_v<T, std::vector<std::string>>) {
        for (const auto& s : v) os << "[" << s << "]";
      } else if constexpr (std::is_same_v<T, std::vector<gsp4_reference::Edge>>) {
        for (const auto& p : v) os << "[" << p.first << " -> " << p.second << "]";
      } else if constexpr (std::is_same_v<T, std::vector<int>>) {
        for (int x : v) os << x << " ";
      } else {
        os << v;
      }
    };
    dump(e, expected);
    dump(g, got);
    out << "  expected: " << e.str() << "\n";
    out << "  got:      " << g.str() << "\n";
  }
}

inline int run_selfcheck(const ReportRequest& req, std::ostream& out) {
  using namespace gsp4_reference;
  int mismatches = 0;
  auto ctx = gsp_context(2, req.cap_override);
  const AdmissibleSet adm = admissible_set(*ctx, ctx->mu());

  check_equal<std::vector<std::string>>("admissible elements", adm_elements(),
                                        labels_of(*ctx, adm.elements), mismatches, out);
  check_equal<std::vector<std::string>>("maximal translations", maximal_translations(),
                                        labels_of(*ctx, adm.maximals), mismatches, out);
  for (int f = 0; f <= 2; ++f) {
    std::vector<std::string> got;
    for (const Elt& x : adm.elements)
      if (p_rank(x) == f) got.push_back(element_label(*ctx, x));
    check_equal<std::vector<std::string>>("p-rank " + std::to_string(f) + " stratum",
                                          p_rank_partition()[static_cast<std::size_t>(f)],
                                          got, mismatches, out);
  }

  for (const LevelTable& t : levels()) {
    SiegelLevel level{std::set<int>(t.J.begin(), t.J.end())};
    Parahoric K(*ctx, level_to_parahoric_gens(2, level));
    const std::vector<Elt> ekor = ekor_set(*ctx, adm, K);
    const std::vector<Elt> kr = kr_set(*ctx, adm, K);
    check_equal<std::vector<std::string>>(t.name + ": EKOR set", t.ekor,
                                          labels_of(*ctx, ekor), mismatches, out);
    check_equal<int>(t.name + ": EKOR count", t.ekor_count,
                     static_cast<int>(ekor.size()), mismatches, out);
    check_equal<int>(t.name + ": KR count", t.kr_count, static_cast<int>(kr.size()),
                     mismatches, out);
    std::vector<std::string> kr_expected;
    for (const KrRow& row : t.rows) kr_expected.push_back(row.kr);
    check_equal<std::vector<std::string>>(t.name + ": KR types", kr_expected,
                                          labels_of(*ctx, kr), mismatches, out);
    for (std::size_t i = 0; i < t.rows.size() && i < kr.size(); ++i) {
      const KrRow& row = t.rows[i];
      const std::vector<Elt> fiber = kr_fiber(*ctx, adm, K, kr[i]);
      check_equal<std::vector<std::string>>(t.name + ": fiber of " + row.kr, row.fiber,
                                            labels_of(*ctx, fiber), mismatches, out);
      std::vector<int> dims, pranks;
      for (const Elt& x : fiber) {
        dims.push_back(ctx->length(x));
        pranks.push_back(p_rank(x));
      }
      check_equal<std::vector<int>>(t.name + ": dims of " + row.kr, row.dims, dims,
                                    mismatches, out);
      check_equal<std::vector<int>>(t.name + ": p-ranks of " + row.kr, row.p_ranks,
                                    pranks, mismatches, out);
      check_equal<std::string>(
          t.name + ": ordinary of " + row.kr, row.ordinary,
          element_label(*ctx, ordinary_section(*ctx, adm, K, kr[i])), mismatches, out);
      check_equal<std::string>(
          t.name + ": superspecial of " + row.kr, row.superspecial,
          element_label(*ctx, superspecial_section(*ctx, adm, K, kr[i])), mismatches,
          out);
    }
    const Poset ep = ekor_poset(*ctx, adm, K);
    std::vector<Edge> ekor_cov = t.ekor_covers;
    std::sort(ekor_cov.begin(), ekor_cov.end());
    check_equal<std::vector<Edge>>(t.name + ": EKOR cover edges", ekor_cov,
                                   cover_labels(ep), mismatches, out);
    const Poset kp = bruhat_poset(*ctx, adm, K);
    std::vector<Edge> kr_cov = t.kr_covers;
    std::sort(kr_cov.begin(), kr_cov.end());
    check_equal<std::vector<Edge>>(t.name + ": KR cover edges", kr_cov,
                                   cover_labels(kp), mismatches, out);
    std::vector<std::string> maxima;
    for (int i : maximal_elements(ep))
      maxima.push_back(ep.nodes[static_cast<std::size_t>(i)].label);
    std::sort(maxima.begin(), maxima.end());
    std::vector<std::string> maxima_expected = t.ekor_maximals;
    std::sort(maxima_expected.begin(), maxima_expected.end());
    check_equal<std::vector<std::string>>(t.name + ": EKOR maximal elements",
                                          maxima_expected, maxima, mismatches, out);
    std::vector<std::string> minima;
    for (int i : minimal_elements(ep))
      minima.push_back(ep.nodes[static_cast<std::size_t>(i)].label);
    check_equal<std::vector<std::string>>(t.name + ": EKOR minimum", {"tau"}, minima,
                                          mismatches, out);
    check_equal<long long>(t.name + ": component count", t.components,
                           component_count(level), mismatches, out);
  }

  {
    Parahoric iwahori(*ctx, {});
    const std::vector<BClass> classes = b_set(*ctx, adm, iwahori);
    check_equal<int>("Newton class count", 3, static_cast<int>(classes.size()),
                     mismatches, out);
    for (std::size_t i = 0; i < classes.size() && i < newton_classes().size(); ++i) {
      const NewtonClassRef& ref = newton_classes()[i];
      check_equal<std::string>("Newton class " + std::to_string(i) + " nu", ref.nu,
                               classes[i].nu.str(), mismatches, out);
      check_equal<int>("Newton class " + std::to_string(i) + " kappa", ref.kappa,
                       classes[i].kappa, mismatches, out);
      check_equal<int>("Newton class " + std::to_string(i) + " leaf dim", ref.leaf_dim,
                       classes[i].leaf_dim, mismatches, out);
      check_equal<int>("Newton class " + std::to_string(i) + " basic",
                       ref.basic ? 1 : 0, classes[i].basic ? 1 : 0, mismatches, out);
      // Newton strata coincide with p-rank strata at g = 2.
      std::vector<std::string> members_expected =
          p_rank_partition()[static_cast<std::size_t>(ref.p_rank)];
      std::vector<std::string> members;
      for (const Elt& x : adm.elements)
        if (newton_point(*ctx, x) == classes[i].nu)
          members.push_back(element_label(*ctx, x));
      check_equal<std::vector<std::string>>(
          "Newton class " + std::to_string(i) + " members (= p-rank stratum)",
          members_expected, members, mismatches, out);
    }
    const HnReport hn = fully_hn_decomposable(*ctx, adm);
    check_equal<int>("fully Hodge-Newton decomposable", fully_hn_expected() ? 1 : 0,
                     hn.decomposable ? 1 : 0, mismatches, out);
  }

  if (mismatches == 0) {
    out << "selfcheck OK\n";
    return 0;
  }
  out << "selfcheck FAILED with " << mismatches << " mismatch(es)\n";
  return 1;
}

inline int run(const ReportRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.group != "gsp") {
      err << "unknown group: " << req.group << "\n";
      return 2;
    }
    if (req.format == Format::dot && req.artifact != Artifact::hasse_ekor &&
        req.artifact != Artifact::hasse_kr) {
      err << "--format dot is only valid for hasse-* artifacts\n";
      return 2;
    }
    if (req.artifact == Artifact::selfcheck) {
      if (req.g != 2) {
        err << "selfcheck reference tables exist for --g 2 only\n";
        return 2;
      }
      return run_selfcheck(req, out);
    }
    for (int i : req.level)
      if (i < 0 || i > req.g) {
        err << "level indices must lie in 0.." << req.g << "\n";
        return 2;
      }
    if (req.level.empty()) {
      err << "level must be a nonempty subset of 0.." << req.g << "\n";
      return 2;
    }
    const LevelData d = build_level(req);
    switch (req.artifact) {
      case Artifact::adm: emit_adm(req, d, out); break;
      case Artifact::ekor: emit_ekor(req, d, out); break;
      case Artifact::kr: emit_kr(req, d, out); break;
      case Artifact::hasse_ekor: emit_poset(req, d, true, out); break;
      case Artifact::hasse_kr: emit_poset(req, d, false, out); break;
      case Artifact::newton: emit_newton(req, d, out); break;
      case Artifact::zip: emit_zip(req, d, out); break;
      case Artifact::summary: emit_summary(req, d, out); break;
      default: break;
    }
    return 0;
  } catch (const cap_exceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace report
}  // namespace strata
