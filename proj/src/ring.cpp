#include "fcr/ring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace fcr {

Limits& limits() {
  static Limits instance;
  return instance;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

std::string describe(const char* law, std::size_t a, std::size_t b, std::size_t c = SIZE_MAX) {
  std::ostringstream os;
  os << law << " fails at (" << a << ", " << b;
  if (c != SIZE_MAX) os << ", " << c;
  os << ")";
  return os.str();
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::optional<std::string> ring_axiom_violation(const RingTables& t) {
  const std::size_t n = t.size;
  if (n == 0) return "ring has no elements";
  if (t.add.size() != n * n || t.mul.size() != n * n) return "table dimensions do not match size";
  if (!t.labels.empty() && t.labels.size() != n) return "label count does not match size";
  if (t.zero >= n || t.one >= n) return "zero or one out of range";
  for (std::size_t i = 0; i < n * n; ++i)
    if (t.add[i] >= n || t.mul[i] >= n) return "table entry out of range";
  auto A = [&](std::size_t a, std::size_t b) -> std::size_t { return t.add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return t.mul[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a) {
    if (A(a, t.zero) != a) return describe("additive identity", a, t.zero);
    if (M(a, t.one) != a) return describe("multiplicative identity", a, t.one);
    bool has_neg = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) return describe("additive commutativity", a, b);
      if (M(a, b) != M(b, a)) return describe("multiplicative commutativity", a, b);
      if (A(a, b) == t.zero) has_neg = true;
    }
    if (!has_neg) return describe("additive inverse", a, a);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = A(a, b);
      const std::size_t mab = M(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (A(ab, c) != A(a, A(b, c))) return describe("additive associativity", a, b, c);
        if (M(mab, c) != M(a, M(b, c))) return describe("multiplicative associativity", a, b, c);
        if (M(a, A(b, c)) != A(mab, M(a, c))) return describe("distributivity", a, b, c);
      }
    }
  return std::nullopt;
}

Elem ProductTag::compose(std::span<const Elem> parts) const {
  Elem x = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    x = static_cast<Elem>(x * factors[i]->size() + parts[i]);
  return x;
}

Elem TrivialExtensionTag::index_of(Elem r, Elem m) const {
  return static_cast<Elem>(r * part_size + m);
}

RingPtr FiniteRing::create(RingTables t, Options options) {
  if (!options.unchecked) {
    if (auto why = ring_axiom_violation(t)) throw StructureError("not a commutative ring: " + *why);
  } else if (t.size == 0 || t.add.size() != t.size * t.size || t.mul.size() != t.size * t.size) {
    throw StructureError("malformed ring tables");
  }
  if (t.size == 1 && !options.allow_zero_ring)
    throw ConstructionError("the zero ring is not admitted as a base ring");
  if (t.size > 1 && t.zero == t.one) throw StructureError("zero equals one in a nonzero ring");

  std::shared_ptr<FiniteRing> r(new FiniteRing());
  const std::size_t n = t.size;
  r->size_ = n;
  r->add_ = std::move(t.add);
  r->mul_ = std::move(t.mul);
  r->zero_ = t.zero;
  r->one_ = t.one;
  r->provenance_ = std::move(t.provenance);
  r->labels_ = std::move(t.labels);
  if (r->labels_.empty()) {
    r->labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r->labels_.push_back(std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i) r->label_index_.emplace(r->labels_[i], static_cast<Elem>(i));

  r->neg_.assign(n, 0);
  r->inverse_.assign(n, static_cast<Elem>(n));
  r->flags_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    ElementFlags f;
    f.regular = true;
    const Elem aa = r->mul(a, a);
    for (Elem b = 0; b < n; ++b) {
      if (r->add(a, b) == r->zero_) r->neg_[a] = b;
      const Elem ab = r->mul(a, b);
      if (ab == r->one_ && !f.unit) {
        f.unit = true;
        r->inverse_[a] = b;
      }
      if (b != r->zero_ && ab == r->zero_) f.regular = false;
      if (r->mul(aa, b) == a) f.vnr = true;
    }
    f.idempotent = (aa == a);
    Elem p = a;
    for (std::size_t k = 1; k <= n; ++k) {
      if (p == r->zero_) {
        f.nilpotent = true;
        break;
      }
      p = r->mul(p, a);
    }
    r->flags_[a] = f;
    if (f.unit) r->units_.push_back(a);
    if (f.idempotent) r->idempotents_.push_back(a);
  }
  r->product_ = std::move(options.product);
  r->trivial_ = std::move(options.trivial);
  return r;
}

Elem FiniteRing::pow(Elem a, std::size_t k) const {
  Elem result = one_;
  Elem base = a;
  while (k) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::size_t FiniteRing::additive_order(Elem a) const {
  std::size_t k = 1;
  Elem x = a;
  while (x != zero_) {
    x = add(x, a);
    ++k;
  }
  return k;
}

Elem FiniteRing::from_integer(long long n) const {
  const auto order = static_cast<long long>(additive_order(one_));
  long long r = ((n % order) + order) % order;
  Elem x = zero_;
  for (long long i = 0; i < r; ++i) x = add(x, one_);
  return x;
}

std::optional<Elem> FiniteRing::inverse(Elem a) const {
  if (!flags_[a].unit) return std::nullopt;
  return inverse_[a];
}

std::optional<Elem> FiniteRing::parse_element(const std::string& text) const {
  const std::string s = trim(text);
  if (auto it = label_index_.find(s); it != label_index_.end()) return it->second;
  long long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return from_integer(v);
}

RingTables FiniteRing::tables() const {
  RingTables t;
  t.size = size_;
  t.add = add_;
  t.mul = mul_;
  t.zero = zero_;
  t.one = one_;
  t.labels = labels_;
  t.provenance = provenance_;
  return t;
}

// ---- homomorphisms ----

std::optional<std::string> ring_hom_violation(const FiniteRing& d, const FiniteRing& c,
                                              std::span<const Elem> image) {
  if (image.size() != d.size()) return "image table has wrong length";
  for (Elem v : image)
    if (v >= c.size()) return "image entry out of range";
  if (image[d.zero()] != c.zero()) return "zero is not preserved";
  if (image[d.one()] != c.one()) return "one is not preserved";
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = 0; b < d.size(); ++b) {
      if (image[d.add(a, b)] != c.add(image[a], image[b])) return describe("additivity", a, b);
      if (image[d.mul(a, b)] != c.mul(image[a], image[b])) return describe("multiplicativity", a, b);
    }
  return std::nullopt;
}

RingHom RingHom::create(RingPtr domain, RingPtr codomain, std::vector<Elem> image) {
  if (auto why = ring_hom_violation(*domain, *codomain, image))
    throw StructureError("not a ring homomorphism: " + *why);
  return RingHom(std::move(domain), std::move(codomain), std::move(image));
}

RingHom RingHom::identity(const RingPtr& ring) {
  std::vector<Elem> img(ring->size());
  std::iota(img.begin(), img.end(), Elem{0});
  return RingHom(ring, ring, std::move(img));
}

bool RingHom::injective() const {
  std::vector<char> hit(codomain_->size(), 0);
  for (Elem v : image_) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool RingHom::surjective() const {
  std::vector<char> hit(codomain_->size(), 0);
  std::size_t count = 0;
  for (Elem v : image_)
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  return count == codomain_->size();
}

RingHom RingHom::then(const RingHom& after) const {
  if (after.domain_.get() != codomain_.get()) throw StructureError("homomorphisms do not compose");
  std::vector<Elem> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = after(image_[i]);
  return RingHom(domain_, after.codomain_, std::move(img));
}

// ---- constructions ----

RingPtr make_zmod(long long n) {
  if (n < 2) throw ConstructionError("Z/n needs n >= 2, got " + std::to_string(n));
  if (static_cast<std::size_t>(n) > limits().ring_cap)
    throw ConstructionError("Z/" + std::to_string(n) + " exceeds the ring size cap");
  RingTables t;
  const auto s = static_cast<std::size_t>(n);
  t.size = s;
  t.add.resize(s * s);
  t.mul.resize(s * s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      t.add[a * s + b] = static_cast<Elem>((a + b) % s);
      t.mul[a * s + b] = static_cast<Elem>((a * b) % s);
    }
  t.zero = 0;
  t.one = 1;
  t.provenance = "Z/" + std::to_string(n);
  return FiniteRing::create(std::move(t));
}

std::string polynomial_label(std::span<const long long> c) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(c[k]);
    } else {
      if (c[k] != 1) out += std::to_string(c[k]);
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

RingPtr make_poly_quotient(long long p, std::span<const long long> coefficients) {
  if (!is_prime(p)) throw ConstructionError("modulus " + std::to_string(p) + " is not prime");
  std::vector<long long> f(coefficients.begin(), coefficients.end());
  for (auto& c : f) c = ((c % p) + p) % p;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) throw ConstructionError("polynomial modulus must have degree >= 1");
  if (f.back() != 1) throw ConstructionError("polynomial modulus must be monic");
  const std::size_t d = f.size() - 1;
  std::size_t size = 1;
  for (std::size_t i = 0; i < d; ++i) {
    size *= static_cast<std::size_t>(p);
    if (size > limits().ring_cap) throw ConstructionError("F_p[x]/(f) exceeds the ring size cap");
  }
  const auto P = static_cast<std::size_t>(p);
  auto digits = [&](std::size_t x) {
    std::vector<long long> v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = static_cast<long long>(x % P);
      x /= P;
    }
    return v;
  };
  auto index = [&](const std::vector<long long>& v) {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * P + static_cast<std::size_t>(v[i]);
    return static_cast<Elem>(x);
  };
  RingTables t;
  t.size = size;
  t.add.resize(size * size);
  t.mul.resize(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    const auto va = digits(a);
    for (std::size_t b = 0; b < size; ++b) {
      const auto vb = digits(b);
      std::vector<long long> sum(d);
      for (std::size_t i = 0; i < d; ++i) sum[i] = (va[i] + vb[i]) % p;
      std::vector<long long> prod(2 * d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p;
      for (std::size_t k = 2 * d - 1; k >= d; --k) {
        const long long c = prod[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= d; ++i)
          prod[k - d + i] = ((prod[k - d + i] - c * f[i]) % p + p) % p;
      }
      prod.resize(d);
      t.add[a * size + b] = index(sum);
      t.mul[a * size + b] = index(prod);
    }
  }
  t.zero = 0;
  t.one = 1;
  t.labels.reserve(size);
  for (std::size_t a = 0; a < size; ++a) t.labels.push_back(polynomial_label(digits(a)));
  t.provenance = "GF(" + std::to_string(p) + "," + polynomial_label(f) + ")";
  return FiniteRing::create(std::move(t));
}

RingPtr make_zero_ring() {
  RingTables t;
  t.size = 1;
  t.add = {0};
  t.mul = {0};
  t.labels = {"0"};
  t.provenance = "0";
  FiniteRing::Options opt;
  opt.allow_zero_ring = true;
  return FiniteRing::create(std::move(t), std::move(opt));
}

ProductRing direct_product(std::span<const RingPtr> factors) {
  if (factors.empty()) throw ConstructionError("direct product needs at least one factor");
  std::size_t size = 1;
  for (const auto& f : factors) {
    size *= f->size();
    if (size > limits().ring_cap) throw ConstructionError("direct product exceeds the ring size cap");
  }
  const std::size_t k = factors.size();
  ProductTag tag;
  tag.factors.assign(factors.begin(), factors.end());
  tag.components.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    std::vector<Elem> parts(k);
    std::size_t rest = x;
    for (std::size_t i = k; i-- > 0;) {
      parts[i] = static_cast<Elem>(rest % factors[i]->size());
      rest /= factors[i]->size();
    }
    tag.components[x] = std::move(parts);
  }
  RingTables t;
  t.size = size;
  t.add.resize(size * size);
  t.mul.resize(size * size);
  std::vector<Elem> s(k), m(k);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      const auto& pa = tag.components[a];
      const auto& pb = tag.components[b];
      for (std::size_t i = 0; i < k; ++i) {
        s[i] = factors[i]->add(pa[i], pb[i]);
        m[i] = factors[i]->mul(pa[i], pb[i]);
      }
      t.add[a * size + b] = tag.compose(s);
      t.mul[a * size + b] = tag.compose(m);
    }
  std::vector<Elem> zeros(k), ones(k);
  for (std::size_t i = 0; i < k; ++i) {
    zeros[i] = factors[i]->zero();
    ones[i] = factors[i]->one();
  }
  t.zero = tag.compose(zeros);
  t.one = tag.compose(ones);
  for (std::size_t i = 0; i < k; ++i) {
    auto parts = zeros;
    parts[i] = factors[i]->one();
    tag.idempotents.push_back(tag.compose(parts));
  }
  t.labels.resize(size);
  for (std::size_t x = 0; x < size; ++x) {
    std::string lab = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) lab += ",";
      lab += factors[i]->label(tag.components[x][i]);
    }
    t.labels[x] = lab + ")";
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (i) t.provenance += " x ";
    t.provenance += grouped(factors[i]->provenance());
  }
  ProductRing out;
  out.idempotents = tag.idempotents;
  FiniteRing::Options opt;
  opt.product = std::move(tag);
  out.ring = FiniteRing::create(std::move(t), std::move(opt));
  return out;
}

// ---- element predicates ----

ElementFlags element_predicates(const FiniteRing& ring, Elem a) {
  if (a >= ring.size()) throw StructureError("element index out of range");
  return ring.flags(a);
}

std::optional<UnitIdempotent> vnr_factorization(const FiniteRing& ring, Elem a) {
  for (Elem u : ring.units())
    for (Elem e : ring.idempotents())
      if (ring.mul(u, e) == a) return UnitIdempotent{u, e};
  return std::nullopt;
}

// ---- homomorphism search ----

namespace {

/// Closure of a subset under + and *, processed pairwise as the list grows.
struct SubringClosure {
  const FiniteRing& ring;
  std::vector<Elem> list;
  std::vector<char> in;
  std::size_t done = 0;

  explicit SubringClosure(const FiniteRing& r) : ring(r), in(r.size(), 0) {}
  void insert(Elem x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  }
  void saturate() {
    while (done < list.size()) {
      const Elem a = list[done];
      for (std::size_t j = 0; j <= done; ++j) {
        const Elem b = list[j];
        insert(ring.add(a, b));
        insert(ring.mul(a, b));
      }
      ++done;
    }
  }
};

/// Extends generator images to a full map, checking additivity and
/// multiplicativity on every pair. Nullopt on conflict.
std::optional<std::vector<Elem>> extend_ring_map(const FiniteRing& d, const FiniteRing& c,
                                                 std::span<const Elem> gens,
                                                 std::span<const Elem> images) {
  const Elem unset = static_cast<Elem>(c.size());
  std::vector<Elem> phi(d.size(), unset);
  std::vector<Elem> list;
  auto assign = [&](Elem x, Elem y) {
    if (phi[x] == unset) {
      phi[x] = y;
      list.push_back(x);
      return true;
    }
    return phi[x] == y;
  };
  if (!assign(d.one(), c.one())) return std::nullopt;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!assign(gens[i], images[i])) return std::nullopt;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Elem a = list[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem b = list[j];
      if (!assign(d.add(a, b), c.add(phi[a], phi[b]))) return std::nullopt;
      if (!assign(d.mul(a, b), c.mul(phi[a], phi[b]))) return std::nullopt;
    }
  }
  if (list.size() != d.size()) return std::nullopt;
  return phi;
}

enum class SearchKind { Isomorphism, Surjection };

std::optional<RingHom> search_homs(const RingPtr& from, const RingPtr& to, std::size_t budget,
                                   SearchKind kind) {
  const FiniteRing& d = *from;
  const FiniteRing& c = *to;
  if (kind == SearchKind::Isomorphism) {
    if (d.size() != c.size() || d.units().size() != c.units().size() ||
        d.idempotents().size() != c.idempotents().size() ||
        d.additive_order(d.one()) != c.additive_order(c.one()))
      return std::nullopt;
  } else if (d.size() < c.size() || d.size() % c.size() != 0) {
    return std::nullopt;
  }
  const auto gens = ring_generators(d);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Elem g = gens[i];
    const auto& fg = d.flags(g);
    const std::size_t og = d.additive_order(g);
    for (Elem y = 0; y < c.size(); ++y) {
      const auto& fy = c.flags(y);
      const std::size_t oy = c.additive_order(y);
      bool ok;
      if (kind == SearchKind::Isomorphism) {
        ok = fg == fy && og == oy;
      } else {
        ok = og % oy == 0 && (!fg.idempotent || fy.idempotent) && (!fg.nilpotent || fy.nilpotent) &&
             (!fg.unit || fy.unit);
      }
      if (ok) candidates[i].push_back(y);
    }
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  std::size_t tried = 0;
  while (true) {
    if (++tried > budget) throw BudgetExceeded("ring homomorphism search exceeded its budget");
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pos[i]];
    if (auto phi = extend_ring_map(d, c, gens, images)) {
      auto hom = RingHom::create(from, to, std::move(*phi));
      const bool good = kind == SearchKind::Isomorphism ? hom.injective() : hom.surjective();
      if (good) return hom;
    }
    std::size_t i = 0;
    while (i < gens.size() && ++pos[i] == candidates[i].size()) {
      pos[i] = 0;
      ++i;
    }
    if (i == gens.size()) return std::nullopt;
  }
}

}  // namespace

std::vector<Elem> ring_generators(const FiniteRing& ring) {
  SubringClosure cl(ring);
  cl.insert(ring.zero());
  cl.insert(ring.one());
  cl.saturate();
  std::vector<Elem> gens;
  for (Elem x = 0; x < ring.size(); ++x) {
    if (cl.in[x]) continue;
    gens.push_back(x);
    cl.insert(x);
    cl.saturate();
  }
  return gens;
}

std::optional<RingHom> find_ring_isomorphism(const RingPtr& a, const RingPtr& b, std::size_t budget) {
  return search_homs(a, b, budget, SearchKind::Isomorphism);
}

std::optional<RingHom> find_surjective_hom(const RingPtr& from, const RingPtr& to, std::size_t budget) {
  return search_homs(from, to, budget, SearchKind::Surjection);
}

std::string grouped(const std::string& expression) {
  int depth = 0;
  for (std::size_t i = 0; i < expression.size(); ++i) {
    const char c = expression[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth == 0 && expression.compare(i, 3, " x ") == 0) return "(" + expression + ")";
  }
  return expression;
}

bool same_ring(const FiniteRing& a, const FiniteRing& b) {
  if (&a == &b) return true;
  return a.size() == b.size() && a.zero() == b.zero() && a.one() == b.one() && a.add_table() == b.add_table() &&
         a.mul_table() == b.mul_table();
}

}  // namespace fcr
