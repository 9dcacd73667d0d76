#include "clc/term.hpp"

#include <cctype>

namespace clc {

char sym_char(Sym s) {
  switch (s) {
    case Sym::C: return 'C';
    case Sym::T: return 'T';
    case Sym::F: return 'F';
    case Sym::K: return 'K';
    case Sym::S: return 'S';
  }
  return '?';
}

std::optional<Sym> sym_from_char(char c) {
  switch (c) {
    case 'C': return Sym::C;
    case 'T': return Sym::T;
    case 'F': return Sym::F;
    case 'K': return Sym::K;
    case 'S': return Sym::S;
    default: return std::nullopt;
  }
}

namespace {
size_t hash_mix(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}
}  // namespace

TermPtr Term::variable(std::string name) {
  std::shared_ptr<Term> t(new Term);
  t->kind_ = Kind::Var;
  t->var_ = std::move(name);
  t->hash_ = hash_mix(0x11, std::hash<std::string>{}(t->var_));
  return t;
}

TermPtr Term::constant(Sym s) {
  std::shared_ptr<Term> t(new Term);
  t->kind_ = Kind::Const;
  t->sym_ = s;
  t->hash_ = hash_mix(0x22, static_cast<size_t>(s));
  return t;
}

TermPtr Term::app(TermPtr l, TermPtr r) {
  std::shared_ptr<Term> t(new Term);
  t->kind_ = Kind::App;
  t->size_ = 1 + l->size() + r->size();
  t->hash_ = hash_mix(hash_mix(0x33, l->hash()), r->hash());
  t->left_ = std::move(l);
  t->right_ = std::move(r);
  return t;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash() || a->kind() != b->kind() || a->size() != b->size()) return false;
  switch (a->kind()) {
    case Term::Kind::Var: return a->var() == b->var();
    case Term::Kind::Const: return a->sym() == b->sym();
    case Term::Kind::App:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
  return false;
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  TermPtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      TermPtr t = parse_apps();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      return t;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      auto s = sym_from_char(c);
      if (!s) throw ParseError(std::string("unknown constant '") + c + "'", pos);
      ++pos;
      return Term::constant(*s);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::islower(static_cast<unsigned char>(text[pos])) ||
              std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
              text[pos] == '\'')) {
        ++pos;
      }
      return Term::variable(text.substr(start, pos - start));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  bool atom_follows() {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  TermPtr parse_apps() {
    TermPtr t = parse_atom();
    while (atom_follows()) t = Term::app(t, parse_atom());
    return t;
  }
};

}  // namespace

TermPtr parse_term(const std::string& text) {
  Parser p(text);
  TermPtr t = p.parse_apps();
  if (!p.at_end()) throw ParseError("trailing input", p.pos);
  return t;
}

static void format_into(const TermPtr& t, std::string& out, bool parens_if_app) {
  switch (t->kind()) {
    case Term::Kind::Var: out += t->var(); return;
    case Term::Kind::Const: out += sym_char(t->sym()); return;
    case Term::Kind::App:
      if (parens_if_app) out += '(';
      format_into(t->left(), out, false);
      out += ' ';
      format_into(t->right(), out, true);
      if (parens_if_app) out += ')';
      return;
  }
}

std::string format_term(const TermPtr& t) {
  std::string out;
  format_into(t, out, false);
  return out;
}

static bool match_rec(const TermPtr& pattern, const TermPtr& subject, Substitution& sigma) {
  switch (pattern->kind()) {
    case Term::Kind::Var: {
      auto it = sigma.bindings.find(pattern->var());
      if (it != sigma.bindings.end()) return equal(it->second, subject);
      sigma.bindings.emplace(pattern->var(), subject);
      return true;
    }
    case Term::Kind::Const:
      return subject->is_const(pattern->sym());
    case Term::Kind::App:
      return subject->is_app() && match_rec(pattern->left(), subject->left(), sigma) &&
             match_rec(pattern->right(), subject->right(), sigma);
  }
  return false;
}

std::optional<Substitution> match_pattern(const TermPtr& pattern, const TermPtr& subject) {
  Substitution sigma;
  if (!match_rec(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

TermPtr subterm_at(const TermPtr& t, const Position& p) {
  TermPtr cur = t;
  for (size_t i = 0; i < p.size(); ++i) {
    if (!cur->is_app() || (p[i] != 0 && p[i] != 1))
      throw PositionError("invalid position in term");
    cur = p[i] == 0 ? cur->left() : cur->right();
  }
  return cur;
}

static TermPtr replace_rec(const TermPtr& t, const Position& p, size_t i, const TermPtr& s) {
  if (i == p.size()) return s;
  if (!t->is_app() || (p[i] != 0 && p[i] != 1)) throw PositionError("invalid position in term");
  if (p[i] == 0) return Term::app(replace_rec(t->left(), p, i + 1, s), t->right());
  return Term::app(t->left(), replace_rec(t->right(), p, i + 1, s));
}

TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& s) {
  return replace_rec(t, p, 0, s);
}

TermPtr apply_subst(const Substitution& sigma, const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var: {
      auto it = sigma.bindings.find(t->var());
      return it != sigma.bindings.end() ? it->second : t;
    }
    case Term::Kind::Const: return t;
    case Term::Kind::App:
      return Term::app(apply_subst(sigma, t->left()), apply_subst(sigma, t->right()));
  }
  return t;
}

}  // namespace clc
