#include "cnr/enumeration.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cnr/graph6.hpp"

namespace cnr {

namespace {

std::mutex gen_mutex;
std::map<int, std::vector<std::string>> gen_cache;

// Connected graphs are built by repeatedly attaching a new last vertex to
// a smaller connected graph (every connected graph has a spanning-tree
// leaf, so every class is reached) and deduplicating canonically.
std::vector<std::string> generate_locked(int n) {
  auto it = gen_cache.find(n);
  if (it != gen_cache.end()) return it->second;
  std::vector<std::string> out;
  if (n == 1) {
    out.push_back(emit_graph6(Graph(1, {})));
  } else {
    std::set<std::string> seen;
    for (const std::string& pg6 : generate_locked(n - 1)) {
      const Graph parent = parse_graph6(pg6);
      auto edges = parent.edges();
      const std::size_t base = edges.size();
      for (std::uint64_t mask = 1; mask < bit(n - 1); ++mask) {
        edges.resize(base);
        for_each_bit(mask, [&](int v) { edges.emplace_back(v, n - 1); });
        seen.insert(canonical_form(Graph(n, edges)));
      }
    }
    out.assign(seen.begin(), seen.end());
  }
  gen_cache[n] = out;
  return out;
}

}  // namespace

std::vector<std::string> generate_connected_g6(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("generate_connected: order must be in 1..8");
  std::lock_guard<std::mutex> lock(gen_mutex);
  return generate_locked(n);
}

std::vector<Graph> generate_connected(int n) {
  std::vector<Graph> out;
  for (const auto& s : generate_connected_g6(n)) out.push_back(parse_graph6(s));
  return out;
}

ResultCache::ResultCache(const std::filesystem::path& file) : file_(file) {
  std::ifstream in(file_);
  if (!in) return;  // absent file = empty cache
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw std::runtime_error("cache: corrupt JSON at line " +
                               std::to_string(lineno));
    }
    if (!j.is_object() || !j.contains("g6") || !j.contains("param") ||
        !j.contains("value") || !j["g6"].is_string() ||
        !j["param"].is_string())
      throw std::runtime_error("cache: malformed record at line " +
                               std::to_string(lineno));
    ExtNat value;
    if (j["value"].is_string()) {
      if (j["value"] != "inf")
        throw std::runtime_error("cache: bad value at line " +
                                 std::to_string(lineno));
      value = ExtNat::infinity();
    } else if (j["value"].is_number_unsigned() ||
               (j["value"].is_number_integer() &&
                j["value"].get<long long>() >= 0)) {
      value = ExtNat(j["value"].get<std::uint64_t>());
    } else {
      throw std::runtime_error("cache: bad value at line " +
                               std::to_string(lineno));
    }
    const auto key = std::make_pair(j["g6"].get<std::string>(),
                                    j["param"].get<std::string>());
    const auto found = entries_.find(key);
    if (found != entries_.end() && found->second != value)
      throw std::runtime_error("cache: conflicting records for (" + key.first +
                               ", " + key.second + ") at line " +
                               std::to_string(lineno));
    entries_.emplace(key, value);
  }
}

std::optional<ExtNat> ResultCache::get(const std::string& g6,
                                       const std::string& param) const {
  const auto it = entries_.find(std::make_pair(g6, param));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string& g6, const std::string& param,
                      ExtNat value) {
  const auto key = std::make_pair(g6, param);
  const auto it = entries_.find(key);
  if (it != entries_.end()) {
    if (it->second != value)
      throw std::runtime_error("cache: conflicting put for (" + g6 + ", " +
                               param + ")");
    return;  // idempotent
  }
  entries_.emplace(key, value);
  nlohmann::json j;
  j["g6"] = g6;
  j["param"] = param;
  if (value.is_infinite())
    j["value"] = "inf";
  else
    j["value"] = value.value();
  std::ofstream out(file_, std::ios::app);
  if (!out) throw std::runtime_error("cache: cannot open " + file_.string());
  out << j.dump() << '\n';
}

namespace {

ExtNat through_cache(ResultCache* cache, const std::string& g6,
                     const std::string& param, auto&& compute) {
  if (cache) {
    if (const auto hit = cache->get(g6, param)) return *hit;
  }
  const ExtNat v = compute();
  if (cache) cache->put(g6, param, v);
  return v;
}

ParamBundle bundle_for(const Graph& g, ResultCache* cache) {
  ParamBundle b;
  b.g6 = canonical_form(g);
  b.n = g.order();
  b.gamma = static_cast<int>(
      through_cache(cache, b.g6, "gamma",
                    [&] { return ExtNat(domination_number(g)); })
          .value());
  b.cop = static_cast<int>(
      through_cache(cache, b.g6, "c", [&] { return ExtNat(cop_number(g)); })
          .value());
  for (int k = 1; k <= b.n; ++k) {
    const std::string ks = std::to_string(k);
    b.capt.push_back(through_cache(cache, b.g6, "capt:" + ks,
                                   [&] { return capture_time(g, k); }));
    b.dmg.push_back(static_cast<int>(
        through_cache(cache, b.g6, "dmg:" + ks,
                      [&] { return ExtNat(damage_number(g, k)); })
            .value()));
    b.rad.push_back(through_cache(cache, b.g6, "rad:" + ks,
                                  [&] { return k_radius(g, k); }));
  }
  // Throttling values follow from the tables; recompute rather than cache
  // so warm-cache runs never touch the solvers.
  b.th_c = ExtNat::infinity();
  for (int k = 1; k <= b.n; ++k) {
    if (b.capt[k - 1].is_infinite()) continue;
    const ExtNat cand = b.capt[k - 1] + k;
    if (cand < b.th_c) {
      b.th_c = cand;
      b.witness_k_thc = k;
    }
  }
  int bestd = INT_MAX;
  for (int k = 1; k <= b.n; ++k) {
    if (k + b.dmg[k - 1] < bestd) {
      bestd = k + b.dmg[k - 1];
      b.witness_k_thd = k;
    }
  }
  b.th_d = bestd;
  return b;
}

ClassRecord record_for(const Graph& g, ResultCache* cache) {
  ClassRecord rec;
  rec.bundle = bundle_for(g, cache);
  rec.gap = static_cast<int>(rec.bundle.th_c.value()) - rec.bundle.th_d;
  rec.tree = is_tree(g);
  rec.chordal = is_chordal(g);
  rec.dismantlable = is_dismantlable(g);
  return rec;
}

}  // namespace

// ---------------------------------------------------------------------------
// Filter language

namespace {

struct Token {
  enum Kind { kIdent, kNumber, kOp, kPlus, kMinus, kSep, kEnd } kind;
  std::string text;
  long long number = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Token::kNumber, s.substr(i, j - i),
                     std::stoll(s.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      const std::string word = s.substr(i, j - i);
      if (word == "and")
        out.push_back({Token::kSep, word});
      else
        out.push_back({Token::kIdent, word});
      i = j;
    } else if (c == '&' || c == ',') {
      while (i < s.size() && (s[i] == '&' || s[i] == ',')) ++i;
      out.push_back({Token::kSep, "&"});
    } else if (c == '+') {
      out.push_back({Token::kPlus, "+"});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::kMinus, "-"});
      ++i;
    } else if (c == '=' || c == '<' || c == '>' || c == '!') {
      std::size_t j = i + 1;
      if (j < s.size() && s[j] == '=') ++j;
      const std::string op = s.substr(i, j - i);
      if (op == "!" )
        throw std::invalid_argument("filter: stray '!'");
      out.push_back({Token::kOp, op == "==" ? "=" : op});
      i = j;
    } else {
      throw std::invalid_argument(std::string("filter: unexpected character '") +
                                  c + "'");
    }
  }
  out.push_back({Token::kEnd, ""});
  return out;
}

constexpr long long kInfValue = LLONG_MAX / 4;

const std::set<std::string> kPlainFields = {
    "n",    "c",       "gamma",        "thc", "thd",
    "gap",  "maxdeg",  "tree",         "chordal", "dismantlable"};

void check_field(const std::string& name) {
  if (kPlainFields.count(name)) return;
  for (const char* prefix : {"capt", "dmg", "rad"}) {
    const std::size_t len = std::string(prefix).size();
    if (name.rfind(prefix, 0) == 0 && name.size() > len &&
        std::all_of(name.begin() + len, name.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      return;
  }
  throw std::invalid_argument("filter: unknown field '" + name + "'");
}

long long field_value(const ClassRecord& rec, const std::string& name) {
  const ParamBundle& b = rec.bundle;
  auto ext = [](const ExtNat& v) {
    return v.is_infinite() ? kInfValue : static_cast<long long>(v.value());
  };
  if (name == "n") return b.n;
  if (name == "c") return b.cop;
  if (name == "gamma") return b.gamma;
  if (name == "thc") return ext(b.th_c);
  if (name == "thd") return b.th_d;
  if (name == "gap") return rec.gap;
  if (name == "maxdeg") return parse_graph6(b.g6).max_degree();
  if (name == "tree") return rec.tree ? 1 : 0;
  if (name == "chordal") return rec.chordal ? 1 : 0;
  if (name == "dismantlable") return rec.dismantlable ? 1 : 0;
  const int k = std::stoi(name.substr(name.find_first_of("0123456789")));
  if (k < 1 || k > b.n) return kInfValue;  // out-of-range k: undefined
  if (name.rfind("capt", 0) == 0) return ext(b.capt[k - 1]);
  if (name.rfind("dmg", 0) == 0) return b.dmg[k - 1];
  return ext(b.rad[k - 1]);
}

}  // namespace

Filter Filter::parse(const std::string& text) {
  Filter f;
  const auto toks = tokenize(text);
  std::size_t i = 0;
  auto parse_sum = [&](std::vector<Term>& side) {
    int sign = 1;
    bool expect_term = true;
    while (true) {
      const Token& t = toks[i];
      if (expect_term) {
        if (t.kind == Token::kNumber) {
          side.push_back({sign, t.number, ""});
        } else if (t.kind == Token::kIdent) {
          if (t.text == "inf") {
            side.push_back({sign, kInfValue, ""});
          } else {
            check_field(t.text);
            side.push_back({sign, 0, t.text});
          }
        } else {
          throw std::invalid_argument("filter: expected a term");
        }
        ++i;
        expect_term = false;
      } else if (t.kind == Token::kPlus || t.kind == Token::kMinus) {
        sign = t.kind == Token::kMinus ? -1 : 1;
        ++i;
        expect_term = true;
      } else {
        return;
      }
    }
  };
  while (toks[i].kind != Token::kEnd) {
    Clause c;
    parse_sum(c.lhs);
    if (toks[i].kind != Token::kOp)
      throw std::invalid_argument("filter: expected a comparison operator");
    c.op = toks[i].text;
    ++i;
    parse_sum(c.rhs);
    f.clauses_.push_back(std::move(c));
    if (toks[i].kind == Token::kSep) {
      ++i;
      if (toks[i].kind == Token::kEnd)
        throw std::invalid_argument("filter: trailing separator");
    } else if (toks[i].kind != Token::kEnd) {
      throw std::invalid_argument("filter: junk after clause");
    }
  }
  return f;
}

bool Filter::matches(const ClassRecord& rec) const {
  auto eval = [&](const std::vector<Term>& side) -> long long {
    long long total = 0;
    bool infinite = false;
    for (const auto& t : side) {
      long long v = t.field.empty() ? t.constant : field_value(rec, t.field);
      if (v >= kInfValue) {
        infinite = true;
        continue;
      }
      total += t.sign * v;
    }
    return infinite ? kInfValue : total;
  };
  for (const auto& c : clauses_) {
    const long long a = eval(c.lhs), b = eval(c.rhs);
    bool ok;
    if (c.op == "=") ok = a == b;
    else if (c.op == "!=") ok = a != b;
    else if (c.op == "<") ok = a < b;
    else if (c.op == "<=") ok = a <= b;
    else if (c.op == ">") ok = a > b;
    else ok = a >= b;
    if (!ok) return false;
  }
  return true;
}

std::vector<ClassRecord> classify(const std::vector<Graph>& graphs,
                                  const Filter& filter, ResultCache* cache,
                                  int workers) {
  if (workers < 1) throw std::invalid_argument("classify: workers >= 1");
  if (cache) workers = 1;  // single cache writer
  std::vector<ClassRecord> records(graphs.size());
  if (workers == 1 || graphs.size() < 2) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      records[i] = record_for(graphs[i], cache);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex m;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(m);
            if (next == graphs.size()) return;
            i = next++;
          }
          records[i] = record_for(graphs[i], nullptr);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<ClassRecord> out;
  for (auto& r : records)
    if (filter.empty() || filter.matches(r)) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) {
    return a.bundle.g6 < b.bundle.g6;
  });
  return out;
}

std::string report_csv(const std::vector<ClassRecord>& records) {
  int kmax = 0;
  for (const auto& r : records) kmax = std::max(kmax, r.bundle.n);
  std::ostringstream out;
  out << "g6,n,c,gamma,th_c,th_d,gap";
  for (const char* p : {"capt", "dmg", "rad"})
    for (int k = 1; k <= kmax; ++k) out << ',' << p << '_' << k;
  out << '\n';
  for (const auto& r : records) {
    const ParamBundle& b = r.bundle;
    out << b.g6 << ',' << b.n << ',' << b.cop << ',' << b.gamma << ','
        << b.th_c.to_string() << ',' << b.th_d << ',' << r.gap;
    for (int k = 1; k <= kmax; ++k)
      out << ',' << (k <= b.n ? b.capt[k - 1].to_string() : "");
    for (int k = 1; k <= kmax; ++k) {
      out << ',';
      if (k <= b.n) out << b.dmg[k - 1];
    }
    for (int k = 1; k <= kmax; ++k)
      out << ',' << (k <= b.n ? b.rad[k - 1].to_string() : "");
    out << '\n';
  }
  return out.str();
}

std::string report_json(const std::vector<ClassRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  auto ext = [](const ExtNat& v) -> nlohmann::json {
    if (v.is_infinite()) return "inf";
    return v.value();
  };
  for (const auto& r : records) {
    const ParamBundle& b = r.bundle;
    nlohmann::json j;
    j["g6"] = b.g6;
    j["n"] = b.n;
    j["c"] = b.cop;
    j["gamma"] = b.gamma;
    j["th_c"] = ext(b.th_c);
    j["th_d"] = b.th_d;
    j["witness_k_thc"] = b.witness_k_thc;
    j["witness_k_thd"] = b.witness_k_thd;
    j["gap"] = r.gap;
    j["capt"] = nlohmann::json::array();
    for (const auto& v : b.capt) j["capt"].push_back(ext(v));
    j["dmg"] = b.dmg;
    j["rad"] = nlohmann::json::array();
    for (const auto& v : b.rad) j["rad"].push_back(ext(v));
    j["tree"] = r.tree;
    j["chordal"] = r.chordal;
    j["dismantlable"] = r.dismantlable;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace cnr
