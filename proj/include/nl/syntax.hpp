#pragma once

// Concrete syntax. ASCII token set:
//   ~  \/  /\  ->  <->  =  !=  .=  .!=  ===  !==  \  .  '  (  )  :  ,  |-
//   keywords: ex all true false nor nex
//   identifiers, decimal numerals
// Operator priority from high to low (application and postfix ' bind above
// all of them):
//   ~  >  (= != .= .!= === !==)  >  /\  >  \/  >  ->  >  <->  >  binders
// /\ and \/ associate left, -> and <-> associate right, the comparison
// operators do not chain, binders extend maximally to the right.

#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nl/term.hpp"
#include "nl/type.hpp"

namespace nl {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct SyntaxError : std::runtime_error {
  Span span;
  SyntaxError(Span s, const std::string& what)
      : std::runtime_error(what), span(s) {}
};

// ---------------------------------------------------------------------------
// Prelude: declared free variables and constants.

struct Prelude {
  std::map<std::string, Var> vars;
  std::map<std::string, Const> consts;

  bool known(const std::string& name) const {
    return vars.count(name) || consts.count(name);
  }

  void declare_var(const std::string& name, const Type& ty) {
    check_fresh(name);
    vars.emplace(name, Var{name, ty});
  }
  void declare_const(const std::string& name, const Type& ty) {
    check_fresh(name);
    consts.emplace(name, Const::declared(name, ty));
  }

 private:
  void check_fresh(const std::string& name) const {
    if (known(name))
      throw std::runtime_error("prelude: duplicate name '" + name + "'");
  }
};

// ---------------------------------------------------------------------------
// Lexer.

enum class Tok {
  Ident,
  Numeral,
  Neg,      // ~
  Or,       // \/
  And,      // the /-backslash conjunction sign
  Imp,      // ->
  Iff,      // <->
  Eq,       // =
  Neq,      // !=
  IdEq,     // .=
  IdNeq,    // .!=
  Equiv,    // ===
  Nequiv,   // !==
  Lambda,   // backslash
  Dot,      // .
  Prime,    // '
  LParen,
  RParen,
  Colon,
  Comma,
  Turnstile,  // |-
  KwEx,
  KwAll,
  KwTrue,
  KwFalse,
  KwNor,
  KwNex,
  End,
};

struct Token {
  Tok tok;
  std::string text;
  Span span;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok t, std::size_t b, std::size_t e) {
    out.push_back(Token{t, src.substr(b, e - b), Span{b, e}});
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t b = i;
    auto starts = [&](const char* s) {
      return src.compare(i, std::char_traits<char>::length(s), s) == 0;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) ||
              src[i] == '_'))
        ++i;
      std::string w = src.substr(b, i - b);
      Tok t = Tok::Ident;
      if (w == "ex") t = Tok::KwEx;
      else if (w == "all") t = Tok::KwAll;
      else if (w == "true") t = Tok::KwTrue;
      else if (w == "false") t = Tok::KwFalse;
      else if (w == "nor") t = Tok::KwNor;
      else if (w == "nex") t = Tok::KwNex;
      push(t, b, i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[i])))
        ++i;
      push(Tok::Numeral, b, i);
      continue;
    }
    // longest match first
    if (starts("<->")) { i += 3; push(Tok::Iff, b, i); continue; }
    if (starts("->")) { i += 2; push(Tok::Imp, b, i); continue; }
    if (starts("===")) { i += 3; push(Tok::Equiv, b, i); continue; }
    if (starts("!==")) { i += 3; push(Tok::Nequiv, b, i); continue; }
    if (starts("!=")) { i += 2; push(Tok::Neq, b, i); continue; }
    if (starts(".!=")) { i += 3; push(Tok::IdNeq, b, i); continue; }
    if (starts(".=")) { i += 2; push(Tok::IdEq, b, i); continue; }
    if (starts("\\/")) { i += 2; push(Tok::Or, b, i); continue; }
    if (starts("/\\")) { i += 2; push(Tok::And, b, i); continue; }
    if (starts("|-")) { i += 2; push(Tok::Turnstile, b, i); continue; }
    switch (c) {
      case '~': push(Tok::Neg, b, ++i); continue;
      case '=': push(Tok::Eq, b, ++i); continue;
      case '\\': push(Tok::Lambda, b, ++i); continue;
      case '.': push(Tok::Dot, b, ++i); continue;
      case '\'': push(Tok::Prime, b, ++i); continue;
      case '(': push(Tok::LParen, b, ++i); continue;
      case ')': push(Tok::RParen, b, ++i); continue;
      case ':': push(Tok::Colon, b, ++i); continue;
      case ',': push(Tok::Comma, b, ++i); continue;
      default:
        throw SyntaxError(Span{b, b + 1},
                          std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::End, "", Span{src.size(), src.size()}});
  return out;
}

// ---------------------------------------------------------------------------
// Surface AST.

enum class SKind {
  Neg, Or, And, Imp, Iff,
  Eq, Neq, IdEq, IdNeq, Equiv, Nequiv,
  Exists, Forall, Lambda,
  App, Succ, Numeral, Truth, Falsity,
  VarRef, ConstRef, NorRef, NexRef,
};

struct SAst;
using SAstPtr = std::shared_ptr<const SAst>;

struct SAst {
  SKind kind;
  Span span;
  std::vector<SAstPtr> kids;
  Var var;           // VarRef, and the binder of Exists/Forall/Lambda
  Const cst;         // ConstRef
  unsigned long num = 0;  // Numeral
};

inline SAstPtr mk_sast(SKind k, Span sp, std::vector<SAstPtr> kids = {}) {
  auto n = std::make_shared<SAst>();
  n->kind = k;
  n->span = sp;
  n->kids = std::move(kids);
  return n;
}

// ---------------------------------------------------------------------------
// Parser.

namespace detail {

class Parser {
 public:
  Parser(std::string src, const Prelude& prelude)
      : src_(std::move(src)), prelude_(prelude), toks_(lex(src_)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool at(Tok t) const { return peek().tok == t; }
  Token expect(Tok t, const char* what) {
    if (!at(t)) throw SyntaxError(peek().span, std::string("expected ") + what);
    return next();
  }
  void expect_end() {
    if (!at(Tok::End))
      throw SyntaxError(peek().span, "unexpected trailing input");
  }

  // type := tatom+   (juxtaposition, right-associative)
  Type parse_type() {
    Span b = peek().span;
    std::vector<Type> atoms;
    while (true) {
      if (at(Tok::LParen)) {
        next();
        atoms.push_back(parse_type());
        expect(Tok::RParen, "')'");
      } else if (at(Tok::Ident) && peek().text == "i") {
        next();
        atoms.push_back(Type::iota());
      } else if (at(Tok::Ident) && peek().text == "o") {
        next();
        atoms.push_back(Type::o());
      } else {
        break;
      }
    }
    if (atoms.empty())
      throw SyntaxError(peek().span, "expected a type");
    Type t = atoms.back();
    for (std::size_t k = atoms.size() - 1; k-- > 0;) {
      if (!is_predicate_type(t))
        throw SyntaxError(Span{b.begin, toks_[pos_ - 1].span.end},
                          "invalid type: codomain i");
      t = Type::fun(atoms[k], t);
    }
    return t;
  }

  SAstPtr parse_term() { return parse_iff(); }

 private:
  Span span_from(Span b) const {
    return Span{b.begin, toks_[pos_ ? pos_ - 1 : 0].span.end};
  }

  SAstPtr parse_iff() {
    Span b = peek().span;
    SAstPtr lhs = parse_imp();
    if (at(Tok::Iff)) {
      next();
      SAstPtr rhs = parse_iff();  // right associative
      return mk_sast(SKind::Iff, span_from(b), {lhs, rhs});
    }
    return lhs;
  }

  SAstPtr parse_imp() {
    Span b = peek().span;
    SAstPtr lhs = parse_or();
    if (at(Tok::Imp)) {
      next();
      SAstPtr rhs = parse_imp();  // right associative
      return mk_sast(SKind::Imp, span_from(b), {lhs, rhs});
    }
    return lhs;
  }

  SAstPtr parse_or() {
    Span b = peek().span;
    SAstPtr lhs = parse_and();
    while (at(Tok::Or)) {
      next();
      SAstPtr rhs = parse_and();
      lhs = mk_sast(SKind::Or, span_from(b), {lhs, rhs});
    }
    return lhs;
  }

  SAstPtr parse_and() {
    Span b = peek().span;
    SAstPtr lhs = parse_cmp();
    while (at(Tok::And)) {
      next();
      SAstPtr rhs = parse_cmp();
      lhs = mk_sast(SKind::And, span_from(b), {lhs, rhs});
    }
    return lhs;
  }

  SAstPtr parse_cmp() {
    Span b = peek().span;
    SAstPtr lhs = parse_neg();
    SKind k;
    switch (peek().tok) {
      case Tok::Eq: k = SKind::Eq; break;
      case Tok::Neq: k = SKind::Neq; break;
      case Tok::IdEq: k = SKind::IdEq; break;
      case Tok::IdNeq: k = SKind::IdNeq; break;
      case Tok::Equiv: k = SKind::Equiv; break;
      case Tok::Nequiv: k = SKind::Nequiv; break;
      default:
        return lhs;
    }
    next();
    SAstPtr rhs = parse_neg();
    switch (peek().tok) {
      case Tok::Eq: case Tok::Neq: case Tok::IdEq:
      case Tok::IdNeq: case Tok::Equiv: case Tok::Nequiv:
        throw SyntaxError(peek().span, "comparison operators do not chain");
      default:
        break;
    }
    return mk_sast(k, span_from(b), {lhs, rhs});
  }

  SAstPtr parse_neg() {
    if (at(Tok::Neg)) {
      Span b = next().span;
      SAstPtr arg = parse_neg();
      return mk_sast(SKind::Neg, span_from(b), {arg});
    }
    return parse_app();
  }

  bool starts_atom() const {
    switch (peek().tok) {
      case Tok::Ident: case Tok::Numeral: case Tok::KwTrue: case Tok::KwFalse:
      case Tok::KwNor: case Tok::KwNex: case Tok::LParen: case Tok::Lambda:
      case Tok::KwEx: case Tok::KwAll:
        return true;
      default:
        return false;
    }
  }

  SAstPtr parse_app() {
    Span b = peek().span;
    SAstPtr t = parse_postfix();
    while (starts_atom()) {
      SAstPtr a = parse_postfix();
      t = mk_sast(SKind::App, span_from(b), {t, a});
    }
    return t;
  }

  SAstPtr parse_postfix() {
    Span b = peek().span;
    SAstPtr t = parse_atom();
    while (at(Tok::Prime)) {
      next();
      t = mk_sast(SKind::Succ, span_from(b), {t});
    }
    return t;
  }

  SAstPtr parse_atom() {
    const Token& tk = peek();
    switch (tk.tok) {
      case Tok::LParen: {
        next();
        SAstPtr t = parse_term();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Numeral: {
        Token n = next();
        auto a = std::make_shared<SAst>();
        a->kind = SKind::Numeral;
        a->span = n.span;
        a->num = std::stoul(n.text);
        return a;
      }
      case Tok::KwTrue:
        return mk_sast(SKind::Truth, next().span);
      case Tok::KwFalse:
        return mk_sast(SKind::Falsity, next().span);
      case Tok::KwNor:
        return mk_sast(SKind::NorRef, next().span);
      case Tok::KwNex:
        return mk_sast(SKind::NexRef, next().span);
      case Tok::Lambda:
        return parse_binder(SKind::Lambda);
      case Tok::KwEx:
        return parse_binder(SKind::Exists);
      case Tok::KwAll:
        return parse_binder(SKind::Forall);
      case Tok::Ident: {
        Token id = next();
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->name == id.text) {
            auto a = std::make_shared<SAst>();
            a->kind = SKind::VarRef;
            a->span = id.span;
            a->var = *it;
            return a;
          }
        }
        if (auto it = prelude_.vars.find(id.text); it != prelude_.vars.end()) {
          auto a = std::make_shared<SAst>();
          a->kind = SKind::VarRef;
          a->span = id.span;
          a->var = it->second;
          return a;
        }
        if (auto it = prelude_.consts.find(id.text);
            it != prelude_.consts.end()) {
          auto a = std::make_shared<SAst>();
          a->kind = SKind::ConstRef;
          a->span = id.span;
          a->cst = it->second;
          return a;
        }
        throw SyntaxError(id.span, "unknown identifier '" + id.text + "'");
      }
      default:
        throw SyntaxError(tk.span, "expected a term");
    }
  }

  // binder := ('\' | 'ex' | 'all') IDENT ':' type '.' term
  // The body is a full term: binders extend maximally to the right.
  SAstPtr parse_binder(SKind kind) {
    Span b = next().span;
    Token id = expect(Tok::Ident, "binder name");
    expect(Tok::Colon, "':'");
    Type ty = parse_type();
    expect(Tok::Dot, "'.'");
    Var v{id.text, ty};
    scope_.push_back(v);
    SAstPtr body = parse_term();
    scope_.pop_back();
    auto a = std::make_shared<SAst>();
    a->kind = kind;
    a->span = span_from(b);
    a->var = v;
    a->kids = {body};
    return a;
  }

  std::string src_;
  const Prelude& prelude_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Var> scope_;
};

}  // namespace detail

inline Type parse_type(const std::string& text) {
  static const Prelude empty;
  detail::Parser p(text, empty);
  Type t = p.parse_type();
  p.expect_end();
  return t;
}

inline SAstPtr parse_term(const std::string& text, const Prelude& prelude) {
  detail::Parser p(text, prelude);
  SAstPtr t = p.parse_term();
  p.expect_end();
  return t;
}

// Sequent text: comma-separated antecedent, `|-`, comma-separated succedent.
// Either side may be empty.
struct SurfaceSequent {
  std::vector<SAstPtr> left, right;
};

inline SurfaceSequent parse_sequent_text(const std::string& text,
                                         const Prelude& prelude) {
  detail::Parser p(text, prelude);
  SurfaceSequent s;
  auto side = [&](std::vector<SAstPtr>& out, Tok stop) {
    if (p.at(stop)) return;
    out.push_back(p.parse_term());
    while (p.at(Tok::Comma)) {
      p.next();
      out.push_back(p.parse_term());
    }
  };
  side(s.left, Tok::Turnstile);
  p.expect(Tok::Turnstile, "'|-'");
  side(s.right, Tok::End);
  p.expect_end();
  return s;
}

// ---------------------------------------------------------------------------
// Prelude files: line-oriented, `var NAME : TYPE` / `const NAME : TYPE`,
// `#` starts a comment. Names starting with '_' are reserved for the
// fresh-variable supply and rejected here.

inline Prelude parse_prelude(const std::string& text) {
  Prelude out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    // split into words
    std::vector<std::string> words;
    std::string cur;
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) words.push_back(std::move(cur)), cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    if (words.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("prelude line " + std::to_string(line_no) +
                               ": " + why);
    };
    if (words.size() < 4 || (words[0] != "var" && words[0] != "const") ||
        words[2] != ":")
      fail("expected 'var NAME : TYPE' or 'const NAME : TYPE'");
    const std::string& name = words[1];
    if (name.empty() || name.front() == '_')
      fail("names starting with '_' are reserved");
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        fail("bad identifier '" + name + "'");
    if (std::isdigit(static_cast<unsigned char>(name.front())))
      fail("bad identifier '" + name + "'");
    static const char* reserved[] = {"ex",   "all", "true", "false",
                                     "nor",  "nex", "i",    "o"};
    for (const char* r : reserved)
      if (name == r) fail("'" + name + "' is a reserved word");
    std::string tytext;
    for (std::size_t k = 3; k < words.size(); ++k) {
      if (k > 3) tytext += ' ';
      tytext += words[k];
    }
    Type ty;
    try {
      ty = parse_type(tytext);
    } catch (const SyntaxError& e) {
      fail(std::string("bad type: ") + e.what());
    }
    try {
      if (words[0] == "var")
        out.declare_var(name, ty);
      else
        out.declare_const(name, ty);
    } catch (const std::runtime_error& e) {
      fail(e.what());
    }
    if (eol == text.size()) break;
  }
  return out;
}

}  // namespace nl
