#include "clusterkit/io.hpp"

#include <fstream>
#include <sstream>

namespace clusterkit {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_element_list(const std::string& line, int line_no) {
  std::vector<int> elems;
  std::size_t pos = 0;
  while (pos < line.size()) {
    std::size_t comma = line.find(',', pos);
    std::string tok = line.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    tok = trim(tok);
    if (tok.empty()) throw ParseError("empty element", line_no);
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      elems.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad element '" + tok + "'", line_no);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (elems[i] <= elems[i - 1])
      throw ParseError("elements must be strictly ascending", line_no);
  return elems;
}

}  // namespace

SetFamily read_family(std::istream& in) {
  // Peek past whitespace; '{' means the JSON form.
  int c;
  while ((c = in.peek()) != EOF &&
         (c == ' ' || c == '\n' || c == '\t' || c == '\r'))
    in.get();
  if (c == '{') {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    return family_from_json(j);
  }

  std::string line;
  int line_no = 0;
  int n = -1, k = -1;
  if (!std::getline(in, line)) throw ParseError("empty input", 1);
  ++line_no;
  {
    std::istringstream hs(trim(line));
    std::string word, ntok, ktok;
    hs >> word >> ntok >> ktok;
    bool ok = word == "FAMILY" && ntok.rfind("n=", 0) == 0 &&
              ktok.rfind("k=", 0) == 0;
    if (ok) {
      try {
        n = std::stoi(ntok.substr(2));
        k = std::stoi(ktok.substr(2));
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok)
      throw ParseError("expected header 'FAMILY n=<n> k=<k>'", line_no);
  }

  std::vector<Mask> masks;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<int> elems = parse_element_list(t, line_no);
    KSubset a;
    try {
      a = KSubset::of(elems, n);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
    if (a.size() != k)
      throw ParseError("set has " + std::to_string(a.size()) +
                           " elements, expected k=" + std::to_string(k),
                       line_no);
    for (Mask m : masks)
      if (m == a.mask()) throw ParseError("duplicate set", line_no);
    masks.push_back(a.mask());
  }
  try {
    return SetFamily::from_masks(n, k, std::move(masks));
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 1);
  }
}

SetFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_family(in);
}

void write_family(std::ostream& out, const SetFamily& f) {
  out << "FAMILY n=" << f.n() << " k=" << f.k() << "\n";
  for (Mask m : f.masks()) {
    out << to_string(KSubset::of_mask(m, f.n())) << "\n";
  }
}

std::string family_to_text(const SetFamily& f) {
  std::ostringstream os;
  write_family(os, f);
  return os.str();
}

namespace {

nlohmann::json sets_to_json(const std::vector<KSubset>& sets) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : sets) arr.push_back(a.elements());
  return arr;
}

std::string rat(const Rational& q) { return format_rational(q); }

}  // namespace

nlohmann::json to_json(const SetFamily& f) {
  nlohmann::json members = nlohmann::json::array();
  for (Mask m : f.masks())
    members.push_back(KSubset::of_mask(m, f.n()).elements());
  return {{"n", f.n()}, {"k", f.k()}, {"members", members}};
}

SetFamily family_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    std::vector<Mask> masks;
    for (const auto& arr : j.at("members")) {
      std::vector<int> elems = arr.get<std::vector<int>>();
      for (std::size_t i = 1; i < elems.size(); ++i)
        if (elems[i] <= elems[i - 1])
          throw ParseError("members must be strictly ascending");
      Mask m = KSubset::of(elems, n).mask();
      for (Mask seen : masks)
        if (seen == m) throw ParseError("duplicate member");
      masks.push_back(m);
    }
    return SetFamily::from_masks(n, k, std::move(masks));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad family JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad family JSON: ") + e.what());
  }
}

nlohmann::json to_json(const ClusterWitness& w) {
  SimplexReport simplex = simplex_check(w.sets);
  return {{"sets", sets_to_json(w.sets)}, {"union_size", w.union_size},
          {"d", w.d},                     {"s", w.s},
          {"simplex", simplex.is_simplex}, {"simplex_cluster", simplex.is_simplex_cluster}};
}

nlohmann::json to_json(const SimplexReport& r) {
  nlohmann::json j{{"simplex", r.is_simplex},
                   {"simplex_cluster", r.is_simplex_cluster},
                   {"union_size", r.union_size}};
  if (r.missing_d_subset) j["missing_d_subset"] = *r.missing_d_subset;
  return j;
}

nlohmann::json to_json(const SWiseReport& r) {
  nlohmann::json j{{"s", r.s}, {"intersecting", r.intersecting}};
  if (r.violating) j["violating"] = sets_to_json(*r.violating);
  return j;
}

nlohmann::json to_json(const UnionBoundReport& r) {
  return {{"level", r.level},
          {"sum_of_deficits", rat(r.sum_of_deficits)},
          {"guaranteed", r.guaranteed}};
}

nlohmann::json to_json(const KKBoundReport& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"l", r.l},
          {"actual", r.actual},
          {"bounds",
           {{"bound1", r.bound1},
            {"bound2", r.bound2},
            {"bound3_epsilon", rat(r.bound3_epsilon)}}},
          {"epsilon", rat(r.epsilon)},
          {"eps_prime", rat(r.eps_prime)},
          {"m", r.m},
          {"C", rat(r.c_param)},
          {"satisfied",
           {{"bound1", r.satisfied1},
            {"bound2", r.satisfied2},
            {"bound3", r.satisfied3}}}};
}

nlohmann::json to_json(const KKMinimalityReport& r) {
  return {{"i", r.i},
          {"k", r.k},
          {"l", r.l},
          {"n", r.n},
          {"samples", r.samples},
          {"seed", r.seed},
          {"lex_shadow_size", r.lex_shadow_size},
          {"min_observed", r.min_observed},
          {"pass", r.pass}};
}

nlohmann::json to_json(const RegularityReport& r) {
  nlohmann::json j{{"r", r.r}, {"epsilon", rat(r.epsilon)}, {"regular", r.regular}};
  if (r.worst) {
    j["worst"] = {{"J", r.worst->j_set.elements()},
                  {"B", r.worst->b_set.elements()},
                  {"deviation", rat(r.worst->deviation)}};
  }
  return j;
}

nlohmann::json to_json(const DecompositionResult& r) {
  nlohmann::json gens = nlohmann::json::array();
  for (Mask g : r.generators)
    gens.push_back(KSubset::of_mask(g, r.j_set.ambient()).elements());
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : r.parts) {
    parts.push_back({{"B", p.b_set.elements()},
                     {"measure", rat(p.part_measure)},
                     {"regular", p.regular},
                     {"r", p.r_used}});
  }
  return {{"found", true},
          {"J", r.j_set.elements()},
          {"generators", gens},
          {"remainder", rat(r.remainder)},
          {"parts", parts}};
}

nlohmann::json to_json(const JuntaClusterVerdict& r) {
  nlohmann::json j{{"cluster_free", r.cluster_free},
                   {"dplus1_wise", r.dplus1_wise},
                   {"equivalent", r.equivalent},
                   {"hypotheses_hold", r.hypotheses_hold}};
  if (r.cluster) j["cluster"] = to_json(*r.cluster);
  if (r.violating_tuple) j["violating"] = sets_to_json(*r.violating_tuple);
  return j;
}

nlohmann::json to_json(const StabilityReport& r) {
  return {{"best_center", r.best_center},
          {"outside_measure", rat(r.outside_measure)},
          {"inside_deficit", rat(r.inside_deficit)}};
}

nlohmann::json to_json(const SolveResult& r) {
  nlohmann::json j{{"d", r.d},
                   {"k", r.k},
                   {"s", r.s},
                   {"n", r.n},
                   {"value", r.value},
                   {"star_is_max", r.star_is_max},
                   {"exact", r.exact},
                   {"witness", to_json(r.witness)["members"]}};
  if (r.uniqueness) {
    nlohmann::json u{{"checked", r.uniqueness->checked}};
    if (r.uniqueness->checked) {
      u["all_maxima_are_stars"] = r.uniqueness->all_maxima_are_stars;
      u["maxima_checked"] = r.uniqueness->maxima_checked;
      if (r.uniqueness->counterexample)
        u["counterexample"] = to_json(*r.uniqueness->counterexample)["members"];
    }
    j["uniqueness"] = u;
  }
  j["stats"] = {{"nodes", r.stats.nodes}, {"wall_ms", r.stats.wall_ms}};
  return j;
}

nlohmann::json to_json(const ScanTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows)
    rows.push_back({{"s", row.s}, {"value", row.value}, {"star_is_max", row.star_is_max}});
  return {{"d", t.d},
          {"k", t.k},
          {"n", t.n},
          {"rows", rows},
          {"non_increasing", t.non_increasing}};
}

}  // namespace clusterkit
