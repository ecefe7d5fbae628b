#include "fcr/verdict.hpp"

#include <stdexcept>

namespace fcr {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::False:
      return "false";
    case Outcome::True:
      return "true";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

const Verdict& RouteSet::primary() const {
  for (const auto& v : routes)
    if (v.authoritative) return v;
  for (const auto& v : routes)
    if (v.decided()) return v;
  if (routes.empty()) throw std::logic_error("route set without routes");
  return routes.front();
}

bool RouteSet::agree() const { return dissenters().empty(); }

std::vector<std::string> RouteSet::dissenters() const {
  std::vector<std::string> out;
  if (routes.empty()) return out;
  const Verdict& p = primary();
  for (const auto& v : routes)
    if (v.decided() && v.result != p.result) out.push_back(v.criterion);
  return out;
}

}  // namespace fcr
