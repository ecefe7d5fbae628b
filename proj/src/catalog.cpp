#include "fcr/catalog.hpp"

#include <functional>
#include <set>

#include "fcr/error.hpp"
#include "fcr/expr.hpp"

namespace fcr {

CatalogSpec CatalogSpec::defaults() {
  CatalogSpec s;
  s.extras = {"Z/2 x Z/4",  "Z/2 x Z/2 x Z/3", "GF(2,x^2)",       "GF(2,x^2+x+1)",
              "GF(3,x^2)",  "triv(Z/2, Z/2)",  "triv(Z/3, Z/3)", "triv(Z/2 x Z/2, Z/2 x Z/2)"};
  // Enough trivial extensions with several factors to exercise the transfer to the base ring.
  s.trivial_extras = {"triv(Z/2, free(2))", "triv(Z/4, R/(2))", "triv(Z/6, R/(2))", "triv(Z/2 x Z/2, R/((0,1)))"};
  return s;
}

void CatalogSpec::validate() const {
  if (max_size == 0 || mset_budget == 0 || module_budget == 0 || product_depth == 0)
    throw ConstructionError("catalog budgets must be positive");
}

namespace {

bool is_prime_power(long long n, long long* p_out) {
  for (long long p = 2; p <= n; ++p) {
    if (n % p) continue;
    long long m = n;
    while (m % p == 0) m /= p;
    *p_out = p;
    return m == 1;
  }
  return false;
}

std::vector<std::string> product_recipes(std::size_t max_size, std::size_t depth) {
  std::vector<long long> local;
  for (long long n = 2; n <= static_cast<long long>(max_size); ++n) {
    long long p = 0;
    if (is_prime_power(n, &p)) local.push_back(n);
  }
  std::vector<std::string> out;
  std::vector<long long> chosen;
  std::function<void(std::size_t, long long)> rec = [&](std::size_t from, long long size) {
    if (chosen.size() >= 2) {
      std::string e;
      for (std::size_t i = 0; i < chosen.size(); ++i) e += (i ? " x Z/" : "Z/") + std::to_string(chosen[i]);
      out.push_back(e);
    }
    if (chosen.size() == depth) return;
    for (std::size_t i = from; i < local.size(); ++i) {
      if (size * local[i] > static_cast<long long>(max_size)) break;
      chosen.push_back(local[i]);
      rec(i, size * local[i]);
      chosen.pop_back();
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace

std::vector<CatalogEntry> build_catalog(const CatalogSpec& spec) {
  spec.validate();
  std::vector<std::string> exprs;
  if (!spec.only_rings.empty()) {
    exprs = spec.only_rings;
  } else {
    if (spec.include_zmod)
      for (std::size_t n = 2; n <= spec.max_size; ++n) exprs.push_back("Z/" + std::to_string(n));
    exprs.insert(exprs.end(), spec.extras.begin(), spec.extras.end());
    if (spec.product_depth >= 2) {
      const auto p = product_recipes(spec.max_size, spec.product_depth);
      exprs.insert(exprs.end(), p.begin(), p.end());
    }
    if (spec.include_trivial) exprs.insert(exprs.end(), spec.trivial_extras.begin(), spec.trivial_extras.end());
  }

  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  for (const auto& text : exprs) {
    CatalogEntry e;
    try {
      e.expr = print_expr(parse_ring_expr(text));
    } catch (const Error& err) {
      e.expr = text;
      e.error = err.what();
    }
    if (!seen.insert(e.expr).second) continue;
    if (e.error.empty()) {
      try {
        e.ring = ring_from_text(e.expr);
        if (spec.only_rings.empty() && e.ring->size() > spec.max_size) continue;
        if (spec.only_mset)
          e.msets.push_back(mset_from_text(*spec.only_mset, e.ring));
        else
          e.msets = enumerate_mult_sets(e.ring, spec.mset_budget);
      } catch (const Error& err) {
        e.error = err.what();
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace fcr
