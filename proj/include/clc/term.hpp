#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace clc {

struct ClcError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : ClcError {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : ClcError(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};
struct PositionError : ClcError {
  using ClcError::ClcError;
};
struct NotARedex : ClcError {
  using ClcError::ClcError;
};
struct ConditionUnknown : ClcError {
  using ClcError::ClcError;
};
struct PreconditionViolated : ClcError {
  using ClcError::ClcError;
};
struct ShapeMismatch : ClcError {
  using ClcError::ClcError;
};

enum class Sym : uint8_t { C, T, F, K, S };

char sym_char(Sym s);
std::optional<Sym> sym_from_char(char c);

class Term;
using TermPtr = std::shared_ptr<const Term>;

// First-order terms over the constants C,T,F,K,S, lowercase variables and
// binary application. Immutable; size and hash cached at construction.
class Term {
 public:
  enum class Kind : uint8_t { Var, Const, App };

  Kind kind() const { return kind_; }
  Sym sym() const { return sym_; }
  const std::string& var() const { return var_; }
  const TermPtr& left() const { return left_; }
  const TermPtr& right() const { return right_; }
  int size() const { return size_; }
  size_t hash() const { return hash_; }

  bool is_var() const { return kind_ == Kind::Var; }
  bool is_const() const { return kind_ == Kind::Const; }
  bool is_const(Sym s) const { return kind_ == Kind::Const && sym_ == s; }
  bool is_app() const { return kind_ == Kind::App; }

  static TermPtr variable(std::string name);
  static TermPtr constant(Sym s);
  static TermPtr app(TermPtr l, TermPtr r);
  static TermPtr app(TermPtr a, TermPtr b, TermPtr c) {
    return app(app(std::move(a), std::move(b)), std::move(c));
  }
  static TermPtr app(TermPtr a, TermPtr b, TermPtr c, TermPtr d) {
    return app(app(app(std::move(a), std::move(b)), std::move(c)), std::move(d));
  }

 private:
  Kind kind_;
  Sym sym_ = Sym::C;
  std::string var_;
  TermPtr left_, right_;
  int size_ = 1;
  size_t hash_ = 0;
  Term() = default;
};

bool equal(const TermPtr& a, const TermPtr& b);

struct TermHash {
  size_t operator()(const TermPtr& t) const { return t->hash(); }
};
struct TermEq {
  bool operator()(const TermPtr& a, const TermPtr& b) const { return equal(a, b); }
};

// Child index path from the root: 0 = function, 1 = argument.
// (Labelled terms reuse this type; tuple children are indexed 0..n-1.)
using Position = std::vector<int>;

struct Substitution {
  std::map<std::string, TermPtr> bindings;
};

TermPtr parse_term(const std::string& text);
std::string format_term(const TermPtr& t);

// Matching with possibly non-linear patterns; repeated variables must bind
// to structurally identical subterms. Variables in the subject are inert.
std::optional<Substitution> match_pattern(const TermPtr& pattern, const TermPtr& subject);

TermPtr subterm_at(const TermPtr& t, const Position& p);
TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& s);
TermPtr apply_subst(const Substitution& sigma, const TermPtr& t);

inline bool position_le(const Position& prefix, const Position& p) {
  if (prefix.size() > p.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i)
    if (prefix[i] != p[i]) return false;
  return true;
}
inline bool positions_disjoint(const Position& a, const Position& b) {
  return !position_le(a, b) && !position_le(b, a);
}
inline Position position_cat(Position a, const Position& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace clc
