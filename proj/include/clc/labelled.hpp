#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clc/term.hpp"

namespace clc {

class LTerm;
using LTermPtr = std::shared_ptr<const LTerm>;

// Labelled terms: the unlabelled syntax plus labelled constants
// C1, C2, T1, F1, K1, S^{n0,...,nk} (k >= 1, all ni >= 1) and tuples
// <t1,...,tn> with n >= 2 (a 1-tuple is identified with its element and
// never constructed).
class LTerm {
 public:
  enum class Kind : uint8_t { Var, Const, Label, App, Tuple };

  Kind kind() const { return kind_; }
  Sym sym() const { return sym_; }                      // Const and Label
  const std::vector<int>& label() const { return label_; }  // Label only
  const std::string& var() const { return var_; }
  const LTermPtr& left() const { return left_; }
  const LTermPtr& right() const { return right_; }
  const std::vector<LTermPtr>& elems() const { return elems_; }  // Tuple only
  int size() const { return size_; }
  size_t hash() const { return hash_; }
  int label_count() const { return label_count_; }  // labelled constants, with multiplicity

  bool is_var() const { return kind_ == Kind::Var; }
  bool is_const() const { return kind_ == Kind::Const; }
  bool is_const(Sym s) const { return kind_ == Kind::Const && sym_ == s; }
  bool is_label() const { return kind_ == Kind::Label; }
  bool is_label(Sym s) const { return kind_ == Kind::Label && sym_ == s; }
  bool is_app() const { return kind_ == Kind::App; }
  bool is_tuple() const { return kind_ == Kind::Tuple; }

  static LTermPtr variable(std::string name);
  static LTermPtr constant(Sym s);
  // Throws ShapeMismatch unless the label is admissible for the symbol:
  // C: {1} or {2}; T, F, K: {1}; S: length >= 2, entries >= 1.
  static LTermPtr labelled(Sym s, std::vector<int> label);
  static LTermPtr app(LTermPtr l, LTermPtr r);
  static LTermPtr app(LTermPtr a, LTermPtr b, LTermPtr c) {
    return app(app(std::move(a), std::move(b)), std::move(c));
  }
  static LTermPtr app(LTermPtr a, LTermPtr b, LTermPtr c, LTermPtr d) {
    return app(app(app(std::move(a), std::move(b)), std::move(c)), std::move(d));
  }
  // 1 element: returns the element itself; 0 elements: throws.
  static LTermPtr tuple(std::vector<LTermPtr> elems);

 private:
  Kind kind_;
  Sym sym_ = Sym::C;
  std::vector<int> label_;
  std::string var_;
  LTermPtr left_, right_;
  std::vector<LTermPtr> elems_;
  int size_ = 1;
  size_t hash_ = 0;
  int label_count_ = 0;
  LTerm() = default;
};

bool equal(const LTermPtr& a, const LTermPtr& b);

struct LTermHash {
  size_t operator()(const LTermPtr& t) const { return t->hash(); }
};
struct LTermEq {
  bool operator()(const LTermPtr& a, const LTermPtr& b) const { return equal(a, b); }
};

// Syntax: labelled constants C1 C2 T1 F1 K1 S^{2,1}; tuples <a, b>;
// otherwise as for unlabelled terms.
LTermPtr parse_lterm(const std::string& text);
std::string format_lterm(const LTermPtr& t);

// App children are 0/1, tuple children 0..n-1.
LTermPtr lsubterm_at(const LTermPtr& t, const Position& p);
LTermPtr lreplace_at(const LTermPtr& t, const Position& p, const LTermPtr& s);
std::vector<Position> lterm_positions(const LTermPtr& t);  // pre-order

// Plain terms embed as labelled terms and conversely.
LTermPtr embed(const TermPtr& t);
bool is_iterm(const LTermPtr& t);               // no labels, no tuples
std::optional<TermPtr> as_iterm(const LTermPtr& t);

// Leftmost erasure: drop labels, project every tuple to its first element.
TermPtr leftmost_erase(const LTermPtr& t);
// All erasures (one choice of element per tuple); may be exponential.
std::vector<TermPtr> erasures(const LTermPtr& t);
// t refines q: every erasure of t equals q. Decided structurally.
bool refines(const LTermPtr& t, const TermPtr& q);

// An s-term has a labelled constant at the head of its outer spine.
bool is_sterm(const LTermPtr& t);

enum class LKind : uint8_t { ITerm, STerm, Tuple, Other };
LKind classify(const LTermPtr& t);

}  // namespace clc
