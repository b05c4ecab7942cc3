#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cnr/enumeration.hpp"
#include "cnr/families.hpp"
#include "cnr/graph6.hpp"

namespace {

using namespace cnr;

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() /
             ("cnr_test_" + name + "_" +
              std::to_string(std::random_device{}()))) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("connected graph counts per order") {
  const int counts[] = {0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) CHECK(generate_connected(n).size() == counts[n]);
  CHECK(generate_connected(7).size() == 853);
  CHECK_THROWS_AS(generate_connected(0), std::invalid_argument);
  CHECK_THROWS_AS(generate_connected(9), std::invalid_argument);
}

TEST_CASE("generated representatives are canonical, sorted, and distinct") {
  for (int n = 3; n <= 6; ++n) {
    const auto keys = generate_connected_g6(n);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::set<std::string>(keys.begin(), keys.end()).size() == keys.size());
    for (const auto& k : keys)
      CHECK(canonical_form(parse_graph6(k)) == k);
  }
}

TEST_CASE("generation matches labeled enumeration at order 5") {
  // Independent count: all labeled order-5 graphs, keep the connected
  // ones, dedup by canonical form.
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
  std::set<std::string> classes;
  for (std::uint64_t m = 0; m < (1ull << pairs.size()); ++m) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (m >> i & 1) edges.push_back(pairs[i]);
    const Graph g(5, edges);
    if (is_connected(g)) classes.insert(canonical_form(g));
  }
  const auto keys = generate_connected_g6(5);
  CHECK(classes == std::set<std::string>(keys.begin(), keys.end()));
}

TEST_CASE("filters select the expected records") {
  const auto order6 = generate_connected(6);
  CHECK(classify(order6, Filter::parse("gap != 1")).empty());
  CHECK(classify(order6, Filter::parse("gamma = 3")).size() == 2);
  // Records where one parked max-degree cop is exactly tight.
  for (const auto& rec :
       classify(order6, Filter::parse("dmg1 = n - maxdeg - 1"))) {
    CHECK(rec.bundle.dmg[0] ==
          rec.bundle.n - parse_graph6(rec.bundle.g6).max_degree() - 1);
  }
  // Conjunctions and field-vs-field comparisons.
  const auto trees = classify(order6, Filter::parse("tree = 1 & c = 1"));
  for (const auto& rec : trees) CHECK(rec.tree);
  CHECK(trees.size() == 6);  // six trees on six vertices
  CHECK_THROWS_AS(Filter::parse("bogus = 1"), std::invalid_argument);
  CHECK_THROWS_AS(Filter::parse("n ="), std::invalid_argument);
}

TEST_CASE("order-7 domination-3 counts") {
  const auto recs = classify(generate_connected(7), Filter::parse("gamma = 3"));
  CHECK(recs.size() == 42);
  int gap1 = 0, gap2 = 0;
  for (const auto& rec : recs) {
    if (rec.gap == 1) ++gap1;
    if (rec.gap == 2) ++gap2;
  }
  CHECK(gap1 == 28);
  CHECK(gap2 == 14);
}

TEST_CASE("classification is order-independent") {
  auto graphs = generate_connected(5);
  std::shuffle(graphs.begin(), graphs.end(), std::mt19937(12345));
  const auto shuffled = classify(graphs, Filter());
  const auto sorted = classify(generate_connected(5), Filter());
  REQUIRE(shuffled.size() == sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    CHECK(shuffled[i].bundle.g6 == sorted[i].bundle.g6);
}

TEST_CASE("result cache stores, reloads, and guards integrity") {
  TempFile tmp("cache");
  {
    ResultCache cache(tmp.path);
    CHECK(!cache.get("IheA@GUAo", "dmg:2").has_value());
    cache.put("IheA@GUAo", "dmg:2", ExtNat(2));
    cache.put("IheA@GUAo", "capt:2", ExtNat::infinity());
    cache.put("IheA@GUAo", "dmg:2", ExtNat(2));  // idempotent re-put
    CHECK(cache.get("IheA@GUAo", "dmg:2") == ExtNat(2));
    CHECK_THROWS_AS(cache.put("IheA@GUAo", "dmg:2", ExtNat(3)),
                    std::runtime_error);
  }
  {
    ResultCache reloaded(tmp.path);
    CHECK(reloaded.get("IheA@GUAo", "dmg:2") == ExtNat(2));
    CHECK(reloaded.get("IheA@GUAo", "capt:2") == ExtNat::infinity());
  }
}

TEST_CASE("result cache rejects corrupt lines by number") {
  TempFile tmp("corrupt");
  {
    std::ofstream out(tmp.path);
    out << R"({"g6": "A_", "param": "c", "value": 1})" << "\n";
    out << "not json\n";
  }
  try {
    ResultCache cache(tmp.path);
    FAIL("expected an integrity error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("csv report") {
  CHECK(report_csv({}) == "g6,n,c,gamma,th_c,th_d,gap\n");
  const auto recs = classify({complete(2)}, Filter());
  REQUIRE(recs.size() == 1);
  const std::string csv = report_csv(recs);
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header ==
        "g6,n,c,gamma,th_c,th_d,gap,capt_1,capt_2,dmg_1,dmg_2,rad_1,rad_2");
  CHECK(row == "A_,2,1,1,2,1,1,1,0,0,0,1,0");
}

TEST_CASE("json report round-trips") {
  const auto recs = classify(generate_connected(4), Filter());
  const auto parsed = nlohmann::json::parse(report_json(recs));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(parsed[i]["g6"] == recs[i].bundle.g6);
    CHECK(parsed[i]["gamma"] == recs[i].bundle.gamma);
    CHECK(parsed[i]["gap"] == recs[i].gap);
  }
}
