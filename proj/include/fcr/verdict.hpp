#pragma once

// Per-criterion decision records shared by module-lab and the classifier.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fcr {

enum class Outcome { False, True, Inconclusive };

const char* to_string(Outcome o);
inline Outcome outcome_of(bool b) { return b ? Outcome::True : Outcome::False; }

struct Witness {
  /// "element", "module", "factor", "ideal" or "instance".
  std::string kind;
  /// Label or replayable expression.
  std::string value;
  std::string detail;
};

struct Verdict {
  std::string criterion;
  std::string anchor;
  Outcome result = Outcome::Inconclusive;
  std::optional<Witness> witness;
  /// Deterministic work units (element operations, candidate checks), not time.
  std::uint64_t cost = 0;
  bool authoritative = false;
  /// Modules consulted by a sampled route; zero for decidable routes.
  std::size_t pool_size = 0;
  /// Free rank per local factor, for projectivity verdicts (0 when that factor is not free).
  std::vector<std::size_t> ranks;
  std::string note;

  bool holds() const noexcept { return result == Outcome::True; }
  bool fails() const noexcept { return result == Outcome::False; }
  bool decided() const noexcept { return result != Outcome::Inconclusive; }
};

/// A set of routes for one question, with the agreement status of the decided ones.
struct RouteSet {
  std::string question;
  std::vector<Verdict> routes;

  /// The authoritative route, or the first decided one.
  const Verdict& primary() const;
  bool agree() const;
  /// Criterion ids of decided routes that differ from the primary.
  std::vector<std::string> dissenters() const;
};

}  // namespace fcr
