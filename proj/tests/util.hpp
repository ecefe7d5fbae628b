#pragma once

#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fcr/expr.hpp"
#include "fcr/ring.hpp"

namespace fcr::test {

inline RingPtr ring(const std::string& text) { return ring_from_text(text); }

inline Elem el(const RingPtr& r, const std::string& label) {
  auto e = r->parse_element(label);
  if (!e) throw std::invalid_argument("no element " + label + " in " + r->provenance());
  return *e;
}

inline std::set<std::string> labels(const FiniteRing& r, const std::vector<Elem>& xs) {
  std::set<std::string> out;
  for (Elem x : xs) out.insert(r.label(x));
  return out;
}

inline MultSet mset(const RingPtr& r, const std::string& text) { return mset_from_text(text, r); }
inline ModulePtr mod(const RingPtr& r, const std::string& text) { return module_from_text(text, r); }

}  // namespace fcr::test
