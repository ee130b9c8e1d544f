#pragma once

#include "clusterkit/cluster.hpp"
#include "clusterkit/family.hpp"
#include "clusterkit/regularity.hpp"
#include "clusterkit/shadow.hpp"
#include "clusterkit/solver.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace clusterkit {

// Family-file problems carry the offending 1-based line (0 when the problem
// is not tied to a line, e.g. unreadable file).
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  explicit ParseError(const std::string& msg)
      : std::runtime_error(msg), line(0) {}
  int line;
};

// Text format: header `FAMILY n=<n> k=<k>`, then one set per line as
// comma-separated ascending elements; `#` starts a comment; duplicates are an
// error. A leading `{` switches to the JSON form {"n":..,"k":..,"members":[..]}.
SetFamily read_family(std::istream& in);
SetFamily read_family_file(const std::string& path);

// Canonical writer: header plus members in lex order. Parsing the output
// reproduces the family exactly.
void write_family(std::ostream& out, const SetFamily& f);
std::string family_to_text(const SetFamily& f);

nlohmann::json to_json(const SetFamily& f);
SetFamily family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClusterWitness& w);
nlohmann::json to_json(const SimplexReport& r);
nlohmann::json to_json(const SWiseReport& r);
nlohmann::json to_json(const UnionBoundReport& r);
nlohmann::json to_json(const KKBoundReport& r);
nlohmann::json to_json(const KKMinimalityReport& r);
nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const DecompositionResult& r);
nlohmann::json to_json(const JuntaClusterVerdict& r);
nlohmann::json to_json(const StabilityReport& r);
nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const ScanTable& t);

}  // namespace clusterkit
