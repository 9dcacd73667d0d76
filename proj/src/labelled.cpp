#include "clc/labelled.hpp"

#include <cctype>
#include <unordered_set>

namespace clc {

namespace {
size_t hash_mix(size_t a, size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}
}  // namespace

LTermPtr LTerm::variable(std::string name) {
  std::shared_ptr<LTerm> t(new LTerm);
  t->kind_ = Kind::Var;
  t->var_ = std::move(name);
  t->hash_ = hash_mix(0x51, std::hash<std::string>{}(t->var_));
  return t;
}

LTermPtr LTerm::constant(Sym s) {
  std::shared_ptr<LTerm> t(new LTerm);
  t->kind_ = Kind::Const;
  t->sym_ = s;
  t->hash_ = hash_mix(0x52, static_cast<size_t>(s));
  return t;
}

LTermPtr LTerm::labelled(Sym s, std::vector<int> label) {
  bool ok;
  switch (s) {
    case Sym::C:
      ok = label.size() == 1 && (label[0] == 1 || label[0] == 2);
      break;
    case Sym::T:
    case Sym::F:
    case Sym::K:
      ok = label.size() == 1 && label[0] == 1;
      break;
    case Sym::S:
      ok = label.size() >= 2;
      for (int n : label) ok = ok && n >= 1;
      break;
    default:
      ok = false;
  }
  if (!ok) throw ShapeMismatch("inadmissible label for constant");
  std::shared_ptr<LTerm> t(new LTerm);
  t->kind_ = Kind::Label;
  t->sym_ = s;
  t->label_ = std::move(label);
  size_t h = hash_mix(0x53, static_cast<size_t>(s));
  for (int n : t->label_) h = hash_mix(h, static_cast<size_t>(n));
  t->hash_ = h;
  t->label_count_ = 1;
  return t;
}

LTermPtr LTerm::app(LTermPtr l, LTermPtr r) {
  std::shared_ptr<LTerm> t(new LTerm);
  t->kind_ = Kind::App;
  t->size_ = 1 + l->size() + r->size();
  t->hash_ = hash_mix(hash_mix(0x54, l->hash()), r->hash());
  t->label_count_ = l->label_count() + r->label_count();
  t->left_ = std::move(l);
  t->right_ = std::move(r);
  return t;
}

LTermPtr LTerm::tuple(std::vector<LTermPtr> elems) {
  if (elems.empty()) throw ShapeMismatch("empty tuple");
  if (elems.size() == 1) return elems[0];
  std::shared_ptr<LTerm> t(new LTerm);
  t->kind_ = Kind::Tuple;
  size_t h = 0x55;
  int sz = 1, lc = 0;
  for (const LTermPtr& e : elems) {
    h = hash_mix(h, e->hash());
    sz += e->size();
    lc += e->label_count();
  }
  t->hash_ = h;
  t->size_ = sz;
  t->label_count_ = lc;
  t->elems_ = std::move(elems);
  return t;
}

bool equal(const LTermPtr& a, const LTermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash() || a->kind() != b->kind() || a->size() != b->size()) return false;
  switch (a->kind()) {
    case LTerm::Kind::Var: return a->var() == b->var();
    case LTerm::Kind::Const: return a->sym() == b->sym();
    case LTerm::Kind::Label: return a->sym() == b->sym() && a->label() == b->label();
    case LTerm::Kind::App:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
    case LTerm::Kind::Tuple: {
      if (a->elems().size() != b->elems().size()) return false;
      for (size_t i = 0; i < a->elems().size(); ++i)
        if (!equal(a->elems()[i], b->elems()[i])) return false;
      return true;
    }
  }
  return false;
}

namespace {

struct LParser {
  const std::string& text;
  size_t pos = 0;

  explicit LParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  int parse_nat() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", pos);
    return std::stoi(text.substr(start, pos - start));
  }

  LTermPtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      LTermPtr t = parse_apps();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      return t;
    }
    if (c == '<') {
      ++pos;
      std::vector<LTermPtr> elems;
      elems.push_back(parse_apps());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        elems.push_back(parse_apps());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != '>') throw ParseError("expected '>'", pos);
      ++pos;
      if (elems.size() < 2) throw ParseError("tuple needs at least two elements", pos);
      return LTerm::tuple(std::move(elems));
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      auto s = sym_from_char(c);
      if (!s) throw ParseError(std::string("unknown constant '") + c + "'", pos);
      ++pos;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos >= text.size() || text[pos] != '{') throw ParseError("expected '{'", pos);
        ++pos;
        std::vector<int> label;
        label.push_back(parse_nat());
        while (pos < text.size() && text[pos] == ',') {
          ++pos;
          label.push_back(parse_nat());
        }
        if (pos >= text.size() || text[pos] != '}') throw ParseError("expected '}'", pos);
        ++pos;
        return LTerm::labelled(*s, std::move(label));
      }
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        return LTerm::labelled(*s, {parse_nat()});
      }
      return LTerm::constant(*s);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::islower(static_cast<unsigned char>(text[pos])) ||
              std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
              text[pos] == '\'')) {
        ++pos;
      }
      return LTerm::variable(text.substr(start, pos - start));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  bool atom_follows() {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return c == '(' || c == '<' || std::isalpha(static_cast<unsigned char>(c));
  }

  LTermPtr parse_apps() {
    LTermPtr t = parse_atom();
    while (atom_follows()) t = LTerm::app(t, parse_atom());
    return t;
  }
};

void format_into(const LTermPtr& t, std::string& out, bool parens_if_app) {
  switch (t->kind()) {
    case LTerm::Kind::Var: out += t->var(); return;
    case LTerm::Kind::Const: out += sym_char(t->sym()); return;
    case LTerm::Kind::Label:
      out += sym_char(t->sym());
      if (t->sym() == Sym::S) {
        out += "^{";
        for (size_t i = 0; i < t->label().size(); ++i) {
          if (i) out += ',';
          out += std::to_string(t->label()[i]);
        }
        out += '}';
      } else {
        out += std::to_string(t->label()[0]);
      }
      return;
    case LTerm::Kind::App:
      if (parens_if_app) out += '(';
      format_into(t->left(), out, false);
      out += ' ';
      format_into(t->right(), out, true);
      if (parens_if_app) out += ')';
      return;
    case LTerm::Kind::Tuple:
      out += '<';
      for (size_t i = 0; i < t->elems().size(); ++i) {
        if (i) out += ", ";
        format_into(t->elems()[i], out, false);
      }
      out += '>';
      return;
  }
}

}  // namespace

LTermPtr parse_lterm(const std::string& text) {
  LParser p(text);
  LTermPtr t = p.parse_apps();
  if (!p.at_end()) throw ParseError("trailing input", p.pos);
  return t;
}

std::string format_lterm(const LTermPtr& t) {
  std::string out;
  format_into(t, out, false);
  return out;
}

LTermPtr lsubterm_at(const LTermPtr& t, const Position& p) {
  LTermPtr cur = t;
  for (size_t i = 0; i < p.size(); ++i) {
    int c = p[i];
    if (cur->is_app() && (c == 0 || c == 1)) {
      cur = c == 0 ? cur->left() : cur->right();
    } else if (cur->is_tuple() && c >= 0 && c < static_cast<int>(cur->elems().size())) {
      cur = cur->elems()[c];
    } else {
      throw PositionError("invalid position in labelled term");
    }
  }
  return cur;
}

static LTermPtr lreplace_rec(const LTermPtr& t, const Position& p, size_t i, const LTermPtr& s) {
  if (i == p.size()) return s;
  int c = p[i];
  if (t->is_app() && (c == 0 || c == 1)) {
    if (c == 0) return LTerm::app(lreplace_rec(t->left(), p, i + 1, s), t->right());
    return LTerm::app(t->left(), lreplace_rec(t->right(), p, i + 1, s));
  }
  if (t->is_tuple() && c >= 0 && c < static_cast<int>(t->elems().size())) {
    std::vector<LTermPtr> elems = t->elems();
    elems[c] = lreplace_rec(elems[c], p, i + 1, s);
    return LTerm::tuple(std::move(elems));
  }
  throw PositionError("invalid position in labelled term");
}

LTermPtr lreplace_at(const LTermPtr& t, const Position& p, const LTermPtr& s) {
  return lreplace_rec(t, p, 0, s);
}

static void collect_lpositions(const LTermPtr& t, Position& cur, std::vector<Position>& out) {
  out.push_back(cur);
  if (t->is_app()) {
    cur.push_back(0);
    collect_lpositions(t->left(), cur, out);
    cur.back() = 1;
    collect_lpositions(t->right(), cur, out);
    cur.pop_back();
  } else if (t->is_tuple()) {
    cur.push_back(0);
    for (size_t i = 0; i < t->elems().size(); ++i) {
      cur.back() = static_cast<int>(i);
      collect_lpositions(t->elems()[i], cur, out);
    }
    cur.pop_back();
  }
}

std::vector<Position> lterm_positions(const LTermPtr& t) {
  std::vector<Position> out;
  Position cur;
  collect_lpositions(t, cur, out);
  return out;
}

LTermPtr embed(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var: return LTerm::variable(t->var());
    case Term::Kind::Const: return LTerm::constant(t->sym());
    case Term::Kind::App: return LTerm::app(embed(t->left()), embed(t->right()));
  }
  return nullptr;
}

bool is_iterm(const LTermPtr& t) {
  if (t->label_count() > 0) return false;
  switch (t->kind()) {
    case LTerm::Kind::Var:
    case LTerm::Kind::Const: return true;
    case LTerm::Kind::Label: return false;
    case LTerm::Kind::App: return is_iterm(t->left()) && is_iterm(t->right());
    case LTerm::Kind::Tuple: return false;
  }
  return false;
}

std::optional<TermPtr> as_iterm(const LTermPtr& t) {
  switch (t->kind()) {
    case LTerm::Kind::Var: return Term::variable(t->var());
    case LTerm::Kind::Const: return Term::constant(t->sym());
    case LTerm::Kind::Label: return std::nullopt;
    case LTerm::Kind::App: {
      auto l = as_iterm(t->left());
      if (!l) return std::nullopt;
      auto r = as_iterm(t->right());
      if (!r) return std::nullopt;
      return Term::app(std::move(*l), std::move(*r));
    }
    case LTerm::Kind::Tuple: return std::nullopt;
  }
  return std::nullopt;
}

TermPtr leftmost_erase(const LTermPtr& t) {
  switch (t->kind()) {
    case LTerm::Kind::Var: return Term::variable(t->var());
    case LTerm::Kind::Const:
    case LTerm::Kind::Label: return Term::constant(t->sym());
    case LTerm::Kind::App:
      return Term::app(leftmost_erase(t->left()), leftmost_erase(t->right()));
    case LTerm::Kind::Tuple: return leftmost_erase(t->elems().front());
  }
  return nullptr;
}

std::vector<TermPtr> erasures(const LTermPtr& t) {
  switch (t->kind()) {
    case LTerm::Kind::Var: return {Term::variable(t->var())};
    case LTerm::Kind::Const:
    case LTerm::Kind::Label: return {Term::constant(t->sym())};
    case LTerm::Kind::App: {
      std::vector<TermPtr> ls = erasures(t->left());
      std::vector<TermPtr> rs = erasures(t->right());
      std::vector<TermPtr> out;
      for (const TermPtr& l : ls)
        for (const TermPtr& r : rs) out.push_back(Term::app(l, r));
      return out;
    }
    case LTerm::Kind::Tuple: {
      std::unordered_set<TermPtr, TermHash, TermEq> seen;
      std::vector<TermPtr> out;
      for (const LTermPtr& e : t->elems())
        for (TermPtr& q : erasures(e))
          if (seen.insert(q).second) out.push_back(std::move(q));
      return out;
    }
  }
  return {};
}

bool refines(const LTermPtr& t, const TermPtr& q) {
  switch (t->kind()) {
    case LTerm::Kind::Var: return q->is_var() && q->var() == t->var();
    case LTerm::Kind::Const:
    case LTerm::Kind::Label: return q->is_const(t->sym());
    case LTerm::Kind::App:
      return q->is_app() && refines(t->left(), q->left()) && refines(t->right(), q->right());
    case LTerm::Kind::Tuple: {
      for (const LTermPtr& e : t->elems())
        if (!refines(e, q)) return false;
      return true;
    }
  }
  return false;
}

bool is_sterm(const LTermPtr& t) {
  const LTerm* cur = t.get();
  while (cur->is_app()) cur = cur->left().get();
  return cur->is_label();
}

LKind classify(const LTermPtr& t) {
  if (is_iterm(t)) return LKind::ITerm;
  if (is_sterm(t)) return LKind::STerm;
  if (t->is_tuple()) return LKind::Tuple;
  return LKind::Other;
}

}  // namespace clc
