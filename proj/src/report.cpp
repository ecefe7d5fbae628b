#include "fcr/report.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fcr {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + text + "'");
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["criterion"] = v.criterion;
  j["anchor"] = v.anchor;
  if (v.decided())
    j["result"] = v.holds();
  else
    j["result"] = "inconclusive";
  if (v.witness) {
    Json w;
    w["kind"] = v.witness->kind;
    w["value"] = v.witness->value;
    if (!v.witness->detail.empty()) w["detail"] = v.witness->detail;
    j["witness"] = std::move(w);
  }
  j["cost"] = v.cost;
  j["authoritative"] = v.authoritative;
  j["pool_size"] = v.pool_size;
  if (!v.ranks.empty()) j["ranks"] = v.ranks;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json route_set_json(const RouteSet& rs) {
  Json j;
  j["question"] = rs.question;
  const Verdict& p = rs.primary();
  j["result"] = p.decided() ? Json(p.holds()) : Json("inconclusive");
  j["agree"] = rs.agree();
  j["dissenters"] = rs.dissenters();
  Json routes = Json::array();
  for (const auto& v : rs.routes) routes.push_back(verdict_json(v));
  j["routes"] = std::move(routes);
  return j;
}

namespace {

Json counts(std::size_t pass, std::size_t fail, std::size_t skipped) {
  Json j;
  j["pass"] = pass;
  j["fail"] = fail;
  j["skipped"] = skipped;
  j["status"] = fail ? "FAIL" : "PASS";
  return j;
}

}  // namespace

Json suite_json(const SuiteReport& r, bool timing) {
  Json j;
  j["suite"] = r.suite;
  j["anchor"] = r.anchor;
  j["summary"] = counts(r.count(Status::Pass), r.count(Status::Fail), r.count(Status::Skipped));
  Json stats = Json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  j["stats"] = std::move(stats);
  if (timing) j["wall_seconds"] = r.wall_seconds;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["assertion"] = e.assertion;
    x["anchor"] = e.anchor;
    x["instance"] = e.instance;
    x["status"] = to_string(e.status);
    if (!e.detail.empty()) x["detail"] = e.detail;
    if (!e.verdicts.empty()) {
      Json vs = Json::array();
      for (const auto& v : e.verdicts) vs.push_back(verdict_json(v));
      x["verdicts"] = std::move(vs);
    }
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json catalog_json(const SuiteContext& ctx) {
  Json j;
  std::size_t pairs = 0;
  Json rings = Json::array();
  Json errors = Json::array();
  for (const auto& e : ctx.catalog()) {
    Json r;
    r["expr"] = e.expr;
    r["size"] = e.ring ? e.ring->size() : 0;
    r["mult_sets"] = e.msets.size();
    rings.push_back(std::move(r));
    pairs += e.msets.size();
    if (!e.error.empty()) errors.push_back(e.expr + ": " + e.error);
  }
  j["max_size"] = ctx.spec().max_size;
  j["module_budget"] = ctx.spec().module_budget;
  j["seed"] = ctx.spec().seed;
  j["ring_count"] = ctx.catalog().size();
  j["pair_count"] = pairs;
  j["rings"] = std::move(rings);
  j["errors"] = std::move(errors);
  return j;
}

Json run_json(const std::string& command, const SuiteContext& ctx, const std::vector<SuiteReport>& reports,
              bool timing) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["catalog"] = catalog_json(ctx);
  std::size_t pass = 0, fail = 0, skipped = 0;
  Json suites = Json::array();
  for (const auto& r : reports) {
    pass += r.count(Status::Pass);
    fail += r.count(Status::Fail);
    skipped += r.count(Status::Skipped);
    suites.push_back(suite_json(r, timing));
  }
  j["summary"] = counts(pass, fail, skipped);
  j["suites"] = std::move(suites);
  return j;
}

std::string run_text(const std::vector<SuiteReport>& reports, bool timing) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "== " << r.suite << "  [" << r.anchor << "]\n";
    for (const auto& e : r.entries) {
      out << to_string(e.status) << "  " << e.assertion;
      if (!e.instance.empty()) out << "  {" << e.instance << "}";
      out << "\n      anchor: " << e.anchor;
      if (!e.detail.empty()) out << "\n      " << e.detail;
      out << "\n";
    }
    out << "-- " << r.suite << ": " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
        << r.count(Status::Skipped) << " skipped";
    for (const auto& [k, v] : r.stats) out << ", " << k << "=" << v;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", r.wall_seconds);
      out << ", " << buf << "s";
    }
    out << "\n";
  }
  return out.str();
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

std::string counterexample_key(const std::string& suite, const std::string& assertion, const std::string& instance) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  feed(suite);
  feed(assertion);
  feed(instance);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DbSummary append_counterexamples(const std::string& path, const std::vector<SuiteReport>& reports) {
  std::set<std::string> keys;
  {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Json j = Json::parse(line, nullptr, false);
      if (j.is_object() && j.contains("key")) keys.insert(j["key"].get<std::string>());
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open counterexample database '" + path + "'");
  DbSummary sum;
  auto put = [&](const std::string& kind, const SuiteReport& r, const SuiteEntry& e, const Json& extra) {
    const std::string key = counterexample_key(r.suite, e.assertion + (kind == "witness" ? "#witness" : ""), e.instance);
    if (!keys.insert(key).second) {
      ++sum.already_present;
      return;
    }
    Json j;
    j["key"] = key;
    j["kind"] = kind;
    j["suite"] = r.suite;
    j["assertion"] = e.assertion;
    j["anchor"] = e.anchor;
    j["instance"] = e.instance;
    if (!e.detail.empty()) j["detail"] = e.detail;
    if (!extra.is_null()) j["verdict"] = extra;
    out << j.dump() << "\n";
    ++sum.added;
  };
  for (const auto& r : reports)
    for (const auto& e : r.entries) {
      if (e.instance.empty()) continue;
      if (e.status == Status::Fail) put("failure", r, e, Json());
      for (const auto& v : e.verdicts)
        if (v.authoritative && v.fails() && v.witness) {
          put("witness", r, e, verdict_json(v));
          break;
        }
    }
  return sum;
}

}  // namespace fcr
