#include "fcr/expr.hpp"

#include <cctype>

#include "fcr/constructions.hpp"
#include "fcr/error.hpp"
#include "fcr/ideal.hpp"

namespace fcr {

bool Expr::is_ring() const {
  switch (kind) {
    case ExprKind::Zmod:
    case ExprKind::Galois:
    case ExprKind::Product:
    case ExprKind::Quotient:
    case ExprKind::Trivial:
    case ExprKind::Mutate:
    case ExprKind::Base:
      return true;
    default:
      return false;
  }
}

bool Expr::is_module() const {
  switch (kind) {
    case ExprKind::Free:
    case ExprKind::Coker:
    case ExprKind::Via:
    case ExprKind::Sum:
    case ExprKind::RingModule:
      return true;
    default:
      return false;
  }
}

bool Expr::is_mset() const {
  return kind == ExprKind::MsetGens || kind == ExprKind::MsetUnits || kind == ExprKind::MsetOne;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

/// Coefficients, constant term first, of a polynomial in x such as "x^2+2x+1".
std::vector<long long> parse_poly(std::string_view text, std::size_t offset) {
  std::vector<long long> c;
  std::size_t i = 0;
  auto fail = [&](const char* what) { throw ParseError(what, offset + i); };
  auto add = [&](std::size_t deg, long long coef) {
    if (c.size() <= deg) c.resize(deg + 1, 0);
    c[deg] += coef;
  };
  bool expect_term = true;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (!expect_term) {
      if (ch != '+') fail("expected '+' in polynomial");
      ++i;
      expect_term = true;
      continue;
    }
    long long coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      coef = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coef = coef * 10 + (text[i++] - '0');
      have_coef = true;
      if (i < text.size() && text[i] == '*') ++i;
    }
    if (i < text.size() && text[i] == 'x') {
      ++i;
      std::size_t deg = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected exponent");
        deg = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) deg = deg * 10 + (text[i++] - '0');
      }
      add(deg, coef);
    } else if (have_coef) {
      add(0, coef);
    } else {
      fail("expected a polynomial term");
    }
    expect_term = false;
  }
  if (expect_term) fail("incomplete polynomial");
  return c;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr ring() {
    skip();
    const std::size_t start = pos_;
    Expr first = term();
    std::vector<Expr> parts;
    parts.push_back(std::move(first));
    while (product_sign()) parts.push_back(term());
    if (parts.size() == 1) return std::move(parts.front());
    Expr e;
    e.kind = ExprKind::Product;
    e.children = std::move(parts);
    e.span = {start, pos_};
    return e;
  }

  Expr module() {
    skip();
    const std::size_t start = pos_;
    Expr left = mterm();
    skip();
    while (starts("(+)")) {
      pos_ += 3;
      Expr right = mterm();
      Expr e;
      e.kind = ExprKind::Sum;
      e.children.push_back(std::move(left));
      e.children.push_back(std::move(right));
      e.span = {start, pos_};
      left = std::move(e);
      skip();
    }
    return left;
  }

  Expr mset() {
    skip();
    const std::size_t start = pos_;
    Expr e;
    if (starts("S{")) {
      pos_ += 2;
      e.kind = ExprKind::MsetGens;
      e.elems = elements('}');
    } else if (starts("S=U")) {
      pos_ += 3;
      e.kind = ExprKind::MsetUnits;
    } else if (starts("S=1")) {
      pos_ += 3;
      e.kind = ExprKind::MsetOne;
    } else {
      fail("expected 'S{', 'S=U' or 'S=1'");
    }
    e.span = {start, pos_};
    return e;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

  bool at_mset() {
    skip();
    return starts("S{") || starts("S=");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool starts(std::string_view lit) const { return s_.substr(pos_, lit.size()) == lit; }
  void expect(std::string_view lit) {
    skip();
    if (!starts(lit)) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  bool word_boundary(std::size_t at) const {
    return at >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[at])) || s_[at] == '_');
  }

  long long integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000'000) fail("integer too large");
    }
    return v;
  }

  bool product_sign() {
    skip();
    if (starts("x") && word_boundary(pos_ + 1)) {
      pos_ += 1;
      return true;
    }
    if (starts("\xC3\x97")) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  /// Labels up to the matching `close`, split at commas outside brackets.
  std::vector<std::string> elements(char close) {
    std::vector<std::string> out;
    std::size_t depth = 0;
    std::size_t start = pos_;
    while (true) {
      if (pos_ >= s_.size()) fail(std::string("missing '") + close + "'");
      const char ch = s_[pos_];
      if (depth == 0 && (ch == close || ch == ',')) {
        std::string item = trim(s_.substr(start, pos_ - start));
        if (item.empty()) fail("empty element");
        out.push_back(std::move(item));
        ++pos_;
        if (ch == close) return out;
        start = pos_;
        continue;
      }
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      if (ch == ')' || ch == ']' || ch == '}') {
        if (depth == 0) fail("unbalanced bracket");
        --depth;
      }
      ++pos_;
    }
  }

  Expr term() {
    skip();
    const std::size_t start = pos_;
    Expr e = atom();
    while (true) {
      skip();
      if (!starts("/(")) break;
      pos_ += 2;
      Expr q;
      q.kind = ExprKind::Quotient;
      q.elems = elements(')');
      q.children.push_back(std::move(e));
      q.span = {start, pos_};
      e = std::move(q);
    }
    return e;
  }

  Expr atom() {
    skip();
    const std::size_t start = pos_;
    Expr e;
    if (starts("Z/")) {
      pos_ += 2;
      e.kind = ExprKind::Zmod;
      e.ints = {integer()};
    } else if (starts("GF(")) {
      pos_ += 3;
      e.kind = ExprKind::Galois;
      e.ints = {integer()};
      expect(",");
      const std::size_t poly_start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
      if (pos_ >= s_.size()) fail("missing ')'");
      const auto coeffs = parse_poly(s_.substr(poly_start, pos_ - poly_start), poly_start);
      e.ints.insert(e.ints.end(), coeffs.begin(), coeffs.end());
      e.text = polynomial_label(coeffs);
      ++pos_;
    } else if (starts("triv(")) {
      pos_ += 5;
      e.kind = ExprKind::Trivial;
      e.children.push_back(ring());
      expect(",");
      e.children.push_back(module());
      expect(")");
    } else if (starts("mutate(")) {
      pos_ += 7;
      e.kind = ExprKind::Mutate;
      e.children.push_back(ring());
      expect(",");
      skip();
      if (starts("add")) {
        e.text = "add";
      } else if (starts("mul")) {
        e.text = "mul";
      } else {
        fail("expected 'add' or 'mul'");
      }
      pos_ += 3;
      for (int k = 0; k < 3; ++k) {
        expect(",");
        e.ints.push_back(integer());
      }
      expect(")");
    } else if (starts("(")) {
      ++pos_;
      e = ring();
      expect(")");
      return e;
    } else if (starts("R") && word_boundary(pos_ + 1)) {
      ++pos_;
      e.kind = ExprKind::Base;
    } else {
      fail("expected a ring");
    }
    e.span = {start, pos_};
    return e;
  }

  Expr mterm() {
    skip();
    const std::size_t start = pos_;
    Expr e;
    if (starts("free(")) {
      pos_ += 5;
      e.kind = ExprKind::Free;
      e.ints = {integer()};
      expect(")");
    } else if (starts("coker[")) {
      pos_ += 6;
      e.kind = ExprKind::Coker;
      while (true) {
        expect("[");
        e.rows.push_back(elements(']'));
        skip();
        if (starts(",")) {
          ++pos_;
          continue;
        }
        expect("]");
        break;
      }
      std::size_t width = e.rows.front().size();
      for (const auto& r : e.rows)
        if (r.size() != width) fail("relation rows of different lengths");
    } else if (starts("via(")) {
      pos_ += 4;
      e.kind = ExprKind::Via;
      e.children.push_back(ring());
      expect(",");
      e.children.push_back(module());
      expect(")");
    } else if (starts("(")) {
      // A grouped module, unless what follows the group makes it a ring.
      const std::size_t save = pos_;
      ++pos_;
      Expr inner = module();
      expect(")");
      skip();
      const bool ring_follows = starts("/(") || (starts("x") && word_boundary(pos_ + 1)) || starts("\xC3\x97");
      if (!ring_follows) return inner;
      pos_ = save;
      e.kind = ExprKind::RingModule;
      e.children.push_back(ring());
    } else {
      e.kind = ExprKind::RingModule;
      e.children.push_back(ring());
    }
    e.span = {start, pos_};
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool mentions_base(const Expr& e) {
  if (e.kind == ExprKind::Base) return true;
  if (e.kind == ExprKind::Trivial) return mentions_base(e.children[0]);
  for (const auto& c : e.children)
    if (mentions_base(c)) return true;
  return false;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out;
}

Elem resolve(const FiniteRing& ring, const std::string& label, const Expr& at) {
  if (auto x = ring.parse_element(label)) return *x;
  throw ParseError("unknown element '" + label + "' of " + ring.provenance(), at.span.begin);
}

std::vector<Elem> resolve_all(const FiniteRing& ring, const std::vector<std::string>& labels, const Expr& at) {
  std::vector<Elem> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(resolve(ring, l, at));
  return out;
}

struct Mapped {
  RingPtr ring;
  /// base -> ring when the expression is built from the base.
  std::optional<RingHom> from_base;
};

Mapped eval_mapped(const Expr& e, const RingPtr& base) {
  if (e.kind == ExprKind::Base) {
    if (!base) throw StructureError("'R' used outside a module expression");
    return {base, RingHom::identity(base)};
  }
  if (e.kind == ExprKind::Quotient) {
    Mapped inner = eval_mapped(e.children[0], base);
    const auto gens = resolve_all(*inner.ring, e.elems, e);
    QuotientRing q = quotient_ring(ideal_generated(inner.ring, gens));
    std::optional<RingHom> hom;
    if (inner.from_base) hom = inner.from_base->then(q.map);
    return {q.ring, std::move(hom)};
  }
  return {eval_ring(e, base), std::nullopt};
}

RingHom hom_from_base(const Mapped& m, const RingPtr& base) {
  if (m.from_base) return *m.from_base;
  if (same_ring(*m.ring, *base)) {
    std::vector<Elem> id(base->size());
    for (Elem x = 0; x < base->size(); ++x) id[x] = x;
    return RingHom::create(base, m.ring, std::move(id));
  }
  if (auto f = find_surjective_hom(base, m.ring)) return *f;
  throw StructureError("no ring map from " + base->provenance() + " onto " + m.ring->provenance());
}

}  // namespace

Expr parse_ring_expr(std::string_view text) {
  Parser p(text);
  Expr e = p.ring();
  p.finish();
  return e;
}

Expr parse_mset_expr(std::string_view text) {
  Parser p(text);
  Expr e = p.mset();
  p.finish();
  return e;
}

Expr parse_module_expr(std::string_view text) {
  Parser p(text);
  Expr e = p.module();
  p.finish();
  return e;
}

Expr parse_expr(std::string_view text) {
  {
    Parser p(text);
    if (p.at_mset()) {
      Expr e = p.mset();
      p.finish();
      return e;
    }
  }
  Expr e = parse_module_expr(text);
  if (e.kind == ExprKind::RingModule && !mentions_base(e.children[0])) return std::move(e.children[0]);
  return e;
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Zmod:
      return "Z/" + std::to_string(e.ints[0]);
    case ExprKind::Galois:
      return "GF(" + std::to_string(e.ints[0]) + "," + e.text + ")";
    case ExprKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += " x ";
        const std::string c = print_expr(e.children[i]);
        out += e.children[i].kind == ExprKind::Product ? "(" + c + ")" : c;
      }
      return out;
    }
    case ExprKind::Quotient: {
      const std::string c = print_expr(e.children[0]);
      return (e.children[0].kind == ExprKind::Product ? "(" + c + ")" : c) + "/(" + join(e.elems) + ")";
    }
    case ExprKind::Trivial:
      return "triv(" + print_expr(e.children[0]) + ", " + print_expr(e.children[1]) + ")";
    case ExprKind::Mutate:
      return "mutate(" + print_expr(e.children[0]) + ", " + e.text + ", " + std::to_string(e.ints[0]) + ", " +
             std::to_string(e.ints[1]) + ", " + std::to_string(e.ints[2]) + ")";
    case ExprKind::Base:
      return "R";
    case ExprKind::Free:
      return "free(" + std::to_string(e.ints[0]) + ")";
    case ExprKind::Coker: {
      std::string out = "coker[";
      for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (i) out += ",";
        out += "[" + join(e.rows[i]) + "]";
      }
      return out + "]";
    }
    case ExprKind::Via:
      return "via(" + print_expr(e.children[0]) + ", " + print_expr(e.children[1]) + ")";
    case ExprKind::Sum: {
      const std::string r = print_expr(e.children[1]);
      return print_expr(e.children[0]) + " (+) " + (e.children[1].kind == ExprKind::Sum ? "(" + r + ")" : r);
    }
    case ExprKind::RingModule:
      return print_expr(e.children[0]);
    case ExprKind::MsetGens:
      return "S{" + join(e.elems) + "}";
    case ExprKind::MsetUnits:
      return "S=U";
    case ExprKind::MsetOne:
      return "S=1";
  }
  return {};
}

RingPtr eval_ring(const Expr& e, const RingPtr& base) {
  switch (e.kind) {
    case ExprKind::Zmod:
      return make_zmod(e.ints[0]);
    case ExprKind::Galois: {
      std::vector<long long> coeffs(e.ints.begin() + 1, e.ints.end());
      return make_poly_quotient(e.ints[0], coeffs);
    }
    case ExprKind::Product: {
      std::vector<RingPtr> factors;
      for (const auto& c : e.children) factors.push_back(eval_ring(c, base));
      return direct_product(factors).ring;
    }
    case ExprKind::Quotient:
    case ExprKind::Base:
      return eval_mapped(e, base).ring;
    case ExprKind::Trivial: {
      RingPtr r = eval_ring(e.children[0], base);
      return trivial_extension(r, eval_module(e.children[1], r));
    }
    case ExprKind::Mutate: {
      RingPtr r = eval_ring(e.children[0], base);
      RingTables t = r->tables();
      const auto n = static_cast<long long>(t.size);
      for (long long v : e.ints)
        if (v < 0 || v >= n) throw StructureError("mutate index out of range");
      auto& table = e.text == "add" ? t.add : t.mul;
      table[static_cast<std::size_t>(e.ints[0] * n + e.ints[1])] = static_cast<Elem>(e.ints[2]);
      t.provenance = print_expr(e);
      FiniteRing::Options opt;
      opt.unchecked = true;
      return FiniteRing::create(std::move(t), std::move(opt));
    }
    default:
      throw StructureError("not a ring expression: " + print_expr(e));
  }
}

MultSet eval_mset(const Expr& e, const RingPtr& ring) {
  switch (e.kind) {
    case ExprKind::MsetGens:
      return mult_closure(ring, resolve_all(*ring, e.elems, e));
    case ExprKind::MsetUnits:
      return unit_mult_set(ring);
    case ExprKind::MsetOne:
      return trivial_mult_set(ring);
    default:
      throw StructureError("not a multiplicative set expression: " + print_expr(e));
  }
}

ModulePtr eval_module(const Expr& e, const RingPtr& base) {
  switch (e.kind) {
    case ExprKind::Free:
      return free_module(base, static_cast<std::size_t>(e.ints[0]));
    case ExprKind::Coker: {
      std::vector<std::vector<Elem>> rows;
      for (const auto& r : e.rows) rows.push_back(resolve_all(*base, r, e));
      return from_presentation(base, rows.front().size(), rows);
    }
    case ExprKind::Via: {
      const Mapped target = eval_mapped(e.children[0], base);
      const RingHom f = hom_from_base(target, base);
      return restrict_scalars(f, eval_module(e.children[1], target.ring), print_expr(e));
    }
    case ExprKind::Sum:
      return direct_sum(eval_module(e.children[0], base), eval_module(e.children[1], base)).module;
    case ExprKind::RingModule: {
      const Expr& r = e.children[0];
      if (r.kind == ExprKind::Base) return free_module(base, 1);
      if (r.kind == ExprKind::Quotient && r.children[0].kind == ExprKind::Base)
        return cyclic_module(ideal_generated(base, resolve_all(*base, r.elems, r)));
      const Mapped target = eval_mapped(r, base);
      if (same_ring(*target.ring, *base)) return free_module(base, 1);
      return restrict_scalars(hom_from_base(target, base), free_module(target.ring, 1), print_expr(r));
    }
    default:
      throw StructureError("not a module expression: " + print_expr(e));
  }
}

RingPtr ring_from_text(std::string_view text) { return eval_ring(parse_ring_expr(text)); }

MultSet mset_from_text(std::string_view text, const RingPtr& ring) { return eval_mset(parse_mset_expr(text), ring); }

ModulePtr module_from_text(std::string_view text, const RingPtr& ring) {
  return eval_module(parse_module_expr(text), ring);
}

Instance parse_instance(std::string_view text) {
  Instance inst;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(';', i);
    if (j == std::string_view::npos) j = text.size();
    const std::string part = trim(text.substr(i, j - i));
    if (!part.empty()) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value", i);
      const std::string key = trim(std::string_view(part).substr(0, eq));
      std::string value = trim(std::string_view(part).substr(eq + 1));
      if (key == "ring")
        inst.ring = std::move(value);
      else if (key == "mset")
        inst.mset = std::move(value);
      else if (key == "module")
        inst.module = std::move(value);
      else
        throw ParseError("unknown key '" + key + "'", i);
    }
    i = j + 1;
  }
  if (inst.ring.empty()) throw ParseError("instance without ring", 0);
  return inst;
}

std::string instance_string(const Instance& inst) {
  std::string out = "ring=" + inst.ring;
  if (!inst.mset.empty()) out += "; mset=" + inst.mset;
  if (!inst.module.empty()) out += "; module=" + inst.module;
  return out;
}

}  // namespace fcr
