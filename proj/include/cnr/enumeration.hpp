#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cnr/graph.hpp"
#include "cnr/solvers.hpp"

namespace cnr {

/// One representative per isomorphism class of connected order-n graphs,
/// sorted by canonical graph6 form. Guaranteed through n = 7; n = 8 is
/// supported but slow. Results are memoized per order.
std::vector<Graph> generate_connected(int n);
std::vector<std::string> generate_connected_g6(int n);

struct ClassRecord {
  ParamBundle bundle;
  int gap = 0;  // th_c - th_d (th_c is always finite)
  bool tree = false;
  bool chordal = false;
  bool dismantlable = false;
};

/// Persistent JSON-lines result store. One record per line:
/// {"g6": str, "param": str, "value": int|"inf"}. Loading rejects corrupt
/// lines (error names the line number); putting a value that contradicts
/// a stored one is an integrity error; re-putting the same value is a
/// no-op.
class ResultCache {
 public:
  explicit ResultCache(const std::filesystem::path& file);
  std::optional<ExtNat> get(const std::string& g6,
                            const std::string& param) const;
  void put(const std::string& g6, const std::string& param, ExtNat value);

 private:
  std::filesystem::path file_;
  std::map<std::pair<std::string, std::string>, ExtNat> entries_;
};

/// Conjunction of integer comparisons over record fields. Grammar:
///   filter := clause { ('&' | ',' | "and") clause }
///   clause := sum ('=' | '==' | '!=' | '<=' | '>=' | '<' | '>') sum
///   sum    := term { ('+' | '-') term }
///   term   := integer | "inf" | field
/// Fields: n, c, gamma, thc, thd, gap, maxdeg, tree, chordal,
/// dismantlable, and captK / dmgK / radK for a literal k (e.g. dmg1).
/// Infinite values compare as larger than every finite one.
class Filter {
 public:
  static Filter parse(const std::string& text);
  bool matches(const ClassRecord& rec) const;
  bool empty() const { return clauses_.empty(); }

 private:
  struct Term {
    int sign;
    long long constant;   // used when field is empty
    std::string field;
  };
  struct Clause {
    std::vector<Term> lhs, rhs;
    std::string op;
  };
  std::vector<Clause> clauses_;
};

/// Full bundle per graph, honoring the filter and cache; output sorted by
/// canonical key regardless of input order. workers > 1 distributes
/// graphs across threads (the cache, if any, forces workers = 1).
std::vector<ClassRecord> classify(const std::vector<Graph>& graphs,
                                  const Filter& filter,
                                  ResultCache* cache = nullptr,
                                  int workers = 1);

/// CSV with fixed columns g6, n, c, gamma, th_c, th_d, gap,
/// capt_1..capt_K, dmg_1..dmg_K, rad_1..rad_K (K = largest order in the
/// record set); cells beyond a record's own order are empty. Infinite
/// values render as "inf".
std::string report_csv(const std::vector<ClassRecord>& records);

/// JSON array mirroring the bundles plus the derived flags.
std::string report_json(const std::vector<ClassRecord>& records);

}  // namespace cnr
