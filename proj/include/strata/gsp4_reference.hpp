#pragma once

#include <string>
#include <utility>
#include <vector>

namespace strata {
namespace gsp4_reference {

// Reference tables for GSp_4 (g = 2), used by the selfcheck command and
// the acceptance suite. Elements appear as lexicographically least
// reduced words; lists are sorted by (length, word); KR classes are
// labelled by their minimal double coset representative.

using Edge = std::pair<std::string, std::string>;

struct KrRow {
  std::string kr;
  std::vector<std::string> fiber;
  std::vector<int> dims;
  std::vector<int> p_ranks;
  std::string ordinary;
  std::string superspecial;
};

struct LevelTable {
  std::string name;
  std::vector<int> J;
  int ekor_count;
  int kr_count;
  std::vector<std::string> ekor;
  std::vector<KrRow> rows;
  std::vector<Edge> ekor_covers;
  std::vector<Edge> kr_covers;
  std::vector<std::string> ekor_maximals;
  long long components;
};

inline const std::vector<std::string>& adm_elements() {
  static const std::vector<std::string> v = {
      "tau",
      "s0 tau", "s1 tau", "s2 tau",
      "s0 s1 tau", "s0 s2 tau", "s1 s0 tau", "s1 s2 tau", "s2 s1 tau",
      "s0 s1 s0 tau", "s0 s2 s1 tau", "s1 s0 s2 tau", "s2 s1 s2 tau"};
  return v;
}

// p-rank partition of the admissible set: 5 + 4 + 4 elements.
inline const std::vector<std::vector<std::string>>& p_rank_partition() {
  static const std::vector<std::vector<std::string>> v = {
      {"tau", "s0 tau", "s1 tau", "s2 tau", "s0 s2 tau"},
      {"s0 s1 tau", "s1 s0 tau", "s1 s2 tau", "s2 s1 tau"},
      {"s0 s1 s0 tau", "s0 s2 s1 tau", "s1 s0 s2 tau", "s2 s1 s2 tau"}};
  return v;
}

// The maximal elements: the W_0-orbit translations t^{mu'}.
inline const std::vector<std::string>& maximal_translations() {
  static const std::vector<std::string> v = {
      "s0 s1 s0 tau", "s0 s2 s1 tau", "s1 s0 s2 tau", "s2 s1 s2 tau"};
  return v;
}

struct NewtonClassRef {
  std::string nu;       // rendered as exact rationals
  int kappa;
  bool basic;
  int leaf_dim;
  int p_rank;           // the p-rank stratum this class matches
};

inline const std::vector<NewtonClassRef>& newton_classes() {
  static const std::vector<NewtonClassRef> v = {
      {"(1/2,1/2,1/2,1/2)", 1, true, 0, 0},
      {"(1,1/2,1/2,0)", 1, false, 2, 1},
      {"(1,1,0,0)", 1, false, 3, 2}};
  return v;
}

inline bool fully_hn_expected() { return true; }

inline const std::vector<LevelTable>& levels() {
  static const std::vector<LevelTable> tables = [] {
    std::vector<LevelTable> out;

    {
      LevelTable t;
      t.name = "hyperspecial";
      t.J = {0};
      t.ekor_count = 4;
      t.kr_count = 1;
      t.ekor = {"tau", "s0 tau", "s0 s1 tau", "s0 s1 s0 tau"};
      t.rows = {{"tau",
                 {"tau", "s0 tau", "s0 s1 tau", "s0 s1 s0 tau"},
                 {0, 1, 2, 3},
                 {0, 0, 1, 2},
                 "s0 s1 s0 tau",
                 "tau"}};
      t.ekor_covers = {{"tau", "s0 tau"},
                       {"s0 tau", "s0 s1 tau"},
                       {"s0 s1 tau", "s0 s1 s0 tau"}};
      t.kr_covers = {};
      t.ekor_maximals = {"s0 s1 s0 tau"};
      t.components = 1;
      out.push_back(std::move(t));
    }

    {
      LevelTable t;
      t.name = "paramodular";
      t.J = {1};
      t.ekor_count = 5;
      t.kr_count = 2;
      t.ekor = {"tau", "s1 tau", "s1 s0 tau", "s1 s2 tau", "s1 s0 s2 tau"};
      t.rows = {{"tau", {"tau"}, {0}, {0}, "tau", "tau"},
                {"s1 tau",
                 {"s1 tau", "s1 s0 tau", "s1 s2 tau", "s1 s0 s2 tau"},
                 {1, 2, 2, 3},
                 {0, 1, 1, 2},
                 "s1 s0 s2 tau",
                 "s1 tau"}};
      t.ekor_covers = {{"tau", "s1 tau"},
                       {"s1 tau", "s1 s0 tau"},
                       {"s1 tau", "s1 s2 tau"},
                       {"s1 s0 tau", "s1 s0 s2 tau"},
                       {"s1 s2 tau", "s1 s0 s2 tau"}};
      t.kr_covers = {{"tau", "s1 tau"}};
      t.ekor_maximals = {"s1 s0 s2 tau"};
      t.components = 1;
      out.push_back(std::move(t));
    }

    {
      LevelTable t;
      t.name = "klingen";
      t.J = {0, 1};
      t.ekor_count = 8;
      t.kr_count = 4;
      t.ekor = {"tau",        "s0 tau",      "s1 tau",      "s0 s1 tau",
                "s1 s0 tau",  "s1 s2 tau",   "s0 s1 s0 tau", "s1 s0 s2 tau"};
      t.rows = {{"tau", {"tau", "s0 tau"}, {0, 1}, {0, 0}, "s0 tau", "tau"},
                {"s1 tau",
                 {"s1 tau", "s1 s0 tau"},
                 {1, 2},
                 {0, 1},
                 "s1 s0 tau",
                 "s1 tau"},
                {"s0 s1 tau",
                 {"s0 s1 tau", "s0 s1 s0 tau"},
                 {2, 3},
                 {1, 2},
                 "s0 s1 s0 tau",
                 "s0 s1 tau"},
                {"s1 s2 tau",
                 {"s1 s2 tau", "s1 s0 s2 tau"},
                 {2, 3},
                 {1, 2},
                 "s1 s0 s2 tau",
                 "s1 s2 tau"}};
      t.ekor_covers = {{"tau", "s0 tau"},
                       {"tau", "s1 tau"},
                       {"s0 tau", "s0 s1 tau"},
                       {"s0 tau", "s1 s0 tau"},
                       {"s0 tau", "s1 s2 tau"},
                       {"s1 tau", "s0 s1 tau"},
                       {"s1 tau", "s1 s0 tau"},
                       {"s1 tau", "s1 s2 tau"},
                       {"s0 s1 tau", "s0 s1 s0 tau"},
                       {"s1 s0 tau", "s0 s1 s0 tau"},
                       {"s1 s0 tau", "s1 s0 s2 tau"},
                       {"s1 s2 tau", "s1 s0 s2 tau"}};
      t.kr_covers = {{"tau", "s1 tau"},
                     {"s1 tau", "s0 s1 tau"},
                     {"s1 tau", "s1 s2 tau"}};
      t.ekor_maximals = {"s0 s1 s0 tau", "s1 s0 s2 tau"};
      t.components = 2;
      out.push_back(std::move(t));
    }

    {
      LevelTable t;
      t.name = "siegel";
      t.J = {0, 2};
      t.ekor_count = 9;
      t.kr_count = 6;
      t.ekor = {"tau",          "s0 tau",       "s2 tau",
                "s0 s1 tau",    "s0 s2 tau",    "s2 s1 tau",
                "s0 s1 s0 tau", "s0 s2 s1 tau", "s2 s1 s2 tau"};
      t.rows = {{"tau", {"tau"}, {0}, {0}, "tau", "tau"},
                {"s0 tau",
                 {"s0 tau", "s0 s1 tau"},
                 {1, 2},
                 {0, 1},
                 "s0 s1 tau",
                 "s0 tau"},
                {"s2 tau",
                 {"s2 tau", "s2 s1 tau"},
                 {1, 2},
                 {0, 1},
                 "s2 s1 tau",
                 "s2 tau"},
                // p-ranks here are 0, 2: the dimension-2 stratum s0 s2 tau
                // carries the supersingular locus at this level.
                {"s0 s2 tau",
                 {"s0 s2 tau", "s0 s2 s1 tau"},
                 {2, 3},
                 {0, 2},
                 "s0 s2 s1 tau",
                 "s0 s2 tau"},
                {"s0 s1 s0 tau", {"s0 s1 s0 tau"}, {3}, {2}, "s0 s1 s0 tau",
                 "s0 s1 s0 tau"},
                {"s2 s1 s2 tau", {"s2 s1 s2 tau"}, {3}, {2}, "s2 s1 s2 tau",
                 "s2 s1 s2 tau"}};
      t.ekor_covers = {{"tau", "s0 tau"},
                       {"tau", "s2 tau"},
                       {"s0 tau", "s0 s1 tau"},
                       {"s0 tau", "s0 s2 tau"},
                       {"s2 tau", "s0 s2 tau"},
                       {"s2 tau", "s2 s1 tau"},
                       {"s0 s1 tau", "s0 s1 s0 tau"},
                       {"s0 s1 tau", "s0 s2 s1 tau"},
                       {"s0 s2 tau", "s0 s2 s1 tau"},
                       {"s2 s1 tau", "s0 s2 s1 tau"},
                       {"s2 s1 tau", "s2 s1 s2 tau"}};
      t.kr_covers = {{"tau", "s0 tau"},
                     {"tau", "s2 tau"},
                     {"s0 tau", "s0 s2 tau"},
                     {"s0 tau", "s0 s1 s0 tau"},
                     {"s2 tau", "s0 s2 tau"},
                     {"s2 tau", "s2 s1 s2 tau"}};
      t.ekor_maximals = {"s0 s1 s0 tau", "s0 s2 s1 tau", "s2 s1 s2 tau"};
      t.components = 3;
      out.push_back(std::move(t));
    }

    {
      LevelTable t;
      t.name = "iwahori";
      t.J = {0, 1, 2};
      t.ekor_count = 13;
      t.kr_count = 13;
      t.ekor = adm_elements();
      const std::vector<int> lens = {0, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3};
      const std::vector<int> pranks = {0, 0, 0, 0, 1, 0, 1, 1, 1, 2, 2, 2, 2};
      for (std::size_t i = 0; i < t.ekor.size(); ++i) {
        t.rows.push_back({t.ekor[i],
                          {t.ekor[i]},
                          {lens[i]},
                          {pranks[i]},
                          t.ekor[i],
                          t.ekor[i]});
      }
      t.ekor_covers = {{"tau", "s0 tau"},
                       {"tau", "s1 tau"},
                       {"tau", "s2 tau"},
                       {"s0 tau", "s0 s1 tau"},
                       {"s0 tau", "s0 s2 tau"},
                       {"s0 tau", "s1 s0 tau"},
                       {"s1 tau", "s0 s1 tau"},
                       {"s1 tau", "s1 s0 tau"},
                       {"s1 tau", "s1 s2 tau"},
                       {"s1 tau", "s2 s1 tau"},
                       {"s2 tau", "s0 s2 tau"},
                       {"s2 tau", "s1 s2 tau"},
                       {"s2 tau", "s2 s1 tau"},
                       {"s0 s1 tau", "s0 s1 s0 tau"},
                       {"s0 s1 tau", "s0 s2 s1 tau"},
                       {"s0 s2 tau", "s0 s2 s1 tau"},
                       {"s0 s2 tau", "s1 s0 s2 tau"},
                       {"s1 s0 tau", "s0 s1 s0 tau"},
                       {"s1 s0 tau", "s1 s0 s2 tau"},
                       {"s1 s2 tau", "s1 s0 s2 tau"},
                       {"s1 s2 tau", "s2 s1 s2 tau"},
                       {"s2 s1 tau", "s0 s2 s1 tau"},
                       {"s2 s1 tau", "s2 s1 s2 tau"}};
      t.kr_covers = t.ekor_covers;
      t.ekor_maximals = maximal_translations();
      t.components = 4;
      out.push_back(std::move(t));
    }

    return out;
  }();
  return tables;
}

}  // namespace gsp4_reference
}  // namespace strata
