#pragma once

// Text syntax for rings, multiplicative sets and modules.
//
//   ring   := term ('x' term)*
//   term   := atom ('/(' elems ')')*
//   atom   := 'Z/' n | 'GF(' p ',' poly ')' | 'triv(' ring ',' module ')'
//           | 'mutate(' ring ',' ('add'|'mul') ',' i ',' j ',' v ')' | '(' ring ')' | 'R'
//   mset   := 'S{' elems '}' | 'S=U' | 'S=1'
//   module := mterm ('(+)' mterm)*
//   mterm  := 'free(' k ')' | 'coker[' row (',' row)* ']' | 'via(' ring ',' module ')'
//           | '(' module ')' | ring
//
// Elements are ring labels and may themselves contain parentheses and commas.
// 'R' names the base ring and only appears inside module expressions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcr/module.hpp"
#include "fcr/multset.hpp"
#include "fcr/ring.hpp"

namespace fcr {

enum class ExprKind {
  Zmod,
  Galois,
  Product,
  Quotient,
  Trivial,
  Mutate,
  Base,
  Free,
  Coker,
  Via,
  Sum,
  RingModule,
  MsetGens,
  MsetUnits,
  MsetOne,
};

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Expr {
  ExprKind kind = ExprKind::Zmod;
  Span span;
  /// Zmod: {n}; Galois: {p}; Free: {k}; Mutate: {i, j, v}.
  std::vector<long long> ints;
  /// Galois: polynomial; Mutate: "add" or "mul".
  std::string text;
  /// Quotient generators and mult-set generators, as labels.
  std::vector<std::string> elems;
  /// Coker relation rows, as labels.
  std::vector<std::vector<std::string>> rows;
  std::vector<Expr> children;

  bool is_ring() const;
  bool is_module() const;
  bool is_mset() const;
};

Expr parse_ring_expr(std::string_view text);
Expr parse_mset_expr(std::string_view text);
Expr parse_module_expr(std::string_view text);
/// Mult-set when it starts with 'S', ring when no module syntax occurs, module otherwise.
Expr parse_expr(std::string_view text);

/// Canonical form; parse(print(e)) reproduces e.
std::string print_expr(const Expr& e);

/// `base` resolves 'R'; without it, 'R' is a StructureError.
RingPtr eval_ring(const Expr& e, const RingPtr& base = nullptr);
MultSet eval_mset(const Expr& e, const RingPtr& ring);
ModulePtr eval_module(const Expr& e, const RingPtr& base);

RingPtr ring_from_text(std::string_view text);
MultSet mset_from_text(std::string_view text, const RingPtr& ring);
ModulePtr module_from_text(std::string_view text, const RingPtr& ring);

/// "ring=<expr>; mset=<expr>[; module=<expr>]".
struct Instance {
  std::string ring;
  std::string mset;
  std::string module;
};
Instance parse_instance(std::string_view text);
std::string instance_string(const Instance& inst);

}  // namespace fcr
