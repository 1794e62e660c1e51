#include "boundsyn/ltl.hpp"

#include <cctype>
#include <sstream>

namespace boundsyn::ltl {

int arity(Kind k) {
  switch (k) {
    case Kind::Atom:
    case Kind::True:
    case Kind::False:
      return 0;
    case Kind::Not:
    case Kind::Next:
    case Kind::Finally:
    case Kind::Globally:
      return 1;
    default:
      return 2;
  }
}

namespace {

bool valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

Formula::Formula() : node_(std::make_shared<const Node>(Node{Kind::True, {}, {}})) {}

Formula Formula::atom(std::string name) {
  if (!valid_atom_name(name)) throw Error("invalid atom name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<const Node>(Node{value ? Kind::True : Kind::False, {}, {}}));
}

Formula Formula::unary(Kind kind, Formula child) {
  if (arity(kind) != 1) throw Error("operator is not unary");
  return Formula(std::make_shared<const Node>(Node{kind, {}, {std::move(child)}}));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  if (arity(kind) != 2) throw Error("operator is not binary");
  return Formula(std::make_shared<const Node>(Node{kind, {}, {std::move(lhs), std::move(rhs)}}));
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || name() != other.name()) return false;
  for (std::size_t i = 0; i < children().size(); ++i) {
    if (child(i) != other.child(i)) return false;
  }
  return true;
}

std::size_t Formula::size() const {
  std::size_t total = 1;
  for (const auto& c : children()) total += c.size();
  return total;
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> result;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->kind() == Kind::Atom) result.insert(f->name());
    for (const auto& c : f->children()) stack.push_back(&c);
  }
  return result;
}

Formula operator!(const Formula& f) { return Formula::unary(Kind::Not, f); }
Formula operator&&(const Formula& a, const Formula& b) { return Formula::binary(Kind::And, a, b); }
Formula operator||(const Formula& a, const Formula& b) { return Formula::binary(Kind::Or, a, b); }
Formula implies(const Formula& a, const Formula& b) { return Formula::binary(Kind::Implies, a, b); }
Formula iff(const Formula& a, const Formula& b) { return Formula::binary(Kind::Iff, a, b); }
Formula next(const Formula& f) { return Formula::unary(Kind::Next, f); }
Formula finally(const Formula& f) { return Formula::unary(Kind::Finally, f); }
Formula globally(const Formula& f) { return Formula::unary(Kind::Globally, f); }
Formula until(const Formula& a, const Formula& b) { return Formula::binary(Kind::Until, a, b); }
Formula release(const Formula& a, const Formula& b) { return Formula::binary(Kind::Release, a, b); }

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : Error(message), offset_(offset), expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Ident, True, False, Not, And, Or, Implies, Iff, Next, Until, Release, Finally, Globally, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "atom";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&&'";
    case Tok::Or: return "'||'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Next: return "'X'";
    case Tok::Until: return "'U'";
    case Tok::Release: return "'R'";
    case Tok::Finally: return "'F'";
    case Tok::Globally: return "'G'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string word(text.substr(start, i - start));
      Tok kind = Tok::Ident;
      if (word == "true") kind = Tok::True;
      else if (word == "false") kind = Tok::False;
      else if (word == "X") kind = Tok::Next;
      else if (word == "F") kind = Tok::Finally;
      else if (word == "G") kind = Tok::Globally;
      else if (word == "U") kind = Tok::Until;
      else if (word == "R") kind = Tok::Release;
      tokens.push_back({kind, start, std::move(word)});
      continue;
    }
    auto starts_with = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
    if (starts_with("<->")) {
      tokens.push_back({Tok::Iff, start, "<->"});
      i += 3;
    } else if (starts_with("->")) {
      tokens.push_back({Tok::Implies, start, "->"});
      i += 2;
    } else if (starts_with("&&")) {
      tokens.push_back({Tok::And, start, "&&"});
      i += 2;
    } else if (starts_with("||")) {
      tokens.push_back({Tok::Or, start, "||"});
      i += 2;
    } else if (c == '&') {
      tokens.push_back({Tok::And, start, "&"});
      ++i;
    } else if (c == '|') {
      tokens.push_back({Tok::Or, start, "|"});
      ++i;
    } else if (c == '!') {
      tokens.push_back({Tok::Not, start, "!"});
      ++i;
    } else if (c == '(') {
      tokens.push_back({Tok::LParen, start, "("});
      ++i;
    } else if (c == ')') {
      tokens.push_back({Tok::RParen, start, ")"});
      ++i;
    } else {
      throw ParseError(start, {}, "unknown character '" + std::string(1, c) + "' at offset " + std::to_string(start));
    }
  }
  tokens.push_back({Tok::End, text.size(), ""});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    expect(Tok::End, {Tok::End, Tok::Iff, Tok::Implies, Tok::Or, Tok::And, Tok::Until, Tok::Release, Tok::RParen});
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }
  void expect(Tok t, std::initializer_list<Tok> expected_set) {
    if (peek().kind == t) {
      ++pos_;
      return;
    }
    std::vector<std::string> expected;
    for (Tok e : expected_set) expected.push_back(describe(e));
    fail(expected);
  }
  [[noreturn]] void fail(const std::vector<std::string>& expected) const {
    std::ostringstream msg;
    msg << "syntax error at offset " << peek().offset << ": unexpected " << describe(peek().kind) << ", expected one of";
    for (const auto& e : expected) msg << ' ' << e;
    throw ParseError(peek().offset, expected, msg.str());
  }

  // <-> is left-associative
  Formula parse_iff() {
    Formula lhs = parse_implies();
    while (accept(Tok::Iff)) lhs = iff(lhs, parse_implies());
    return lhs;
  }
  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept(Tok::Implies)) return implies(lhs, parse_implies());
    return lhs;
  }
  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept(Tok::Or)) lhs = lhs || parse_and();
    return lhs;
  }
  Formula parse_and() {
    Formula lhs = parse_temporal();
    while (accept(Tok::And)) lhs = lhs && parse_temporal();
    return lhs;
  }
  Formula parse_temporal() {
    Formula lhs = parse_unary();
    if (accept(Tok::Until)) return until(lhs, parse_temporal());
    if (accept(Tok::Release)) return release(lhs, parse_temporal());
    return lhs;
  }
  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not: ++pos_; return !parse_unary();
      case Tok::Next: ++pos_; return next(parse_unary());
      case Tok::Finally: ++pos_; return finally(parse_unary());
      case Tok::Globally: ++pos_; return globally(parse_unary());
      case Tok::True: ++pos_; return Formula::constant(true);
      case Tok::False: ++pos_; return Formula::constant(false);
      case Tok::Ident: ++pos_; return Formula::atom(t.text);
      case Tok::LParen: {
        ++pos_;
        Formula inner = parse_iff();
        expect(Tok::RParen, {Tok::RParen, Tok::Iff, Tok::Implies, Tok::Or, Tok::And, Tok::Until, Tok::Release});
        return inner;
      }
      default:
        fail({describe(Tok::Ident), describe(Tok::True), describe(Tok::False), describe(Tok::Not), describe(Tok::Next),
              describe(Tok::Finally), describe(Tok::Globally), describe(Tok::LParen)});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: return f.name();
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Not: return "!" + to_string(f.child(0));
    case Kind::Next: return "X " + to_string(f.child(0));
    case Kind::Finally: return "F " + to_string(f.child(0));
    case Kind::Globally: return "G " + to_string(f.child(0));
    case Kind::And: return "(" + to_string(f.child(0)) + " && " + to_string(f.child(1)) + ")";
    case Kind::Or: return "(" + to_string(f.child(0)) + " || " + to_string(f.child(1)) + ")";
    case Kind::Implies: return "(" + to_string(f.child(0)) + " -> " + to_string(f.child(1)) + ")";
    case Kind::Iff: return "(" + to_string(f.child(0)) + " <-> " + to_string(f.child(1)) + ")";
    case Kind::Until: return "(" + to_string(f.child(0)) + " U " + to_string(f.child(1)) + ")";
    case Kind::Release: return "(" + to_string(f.child(0)) + " R " + to_string(f.child(1)) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Negation normal form

namespace {

Formula nnf(const Formula& f, bool negated) {
  const Formula T = Formula::constant(true);
  const Formula F = Formula::constant(false);
  switch (f.kind()) {
    case Kind::Atom: return negated ? !f : f;
    case Kind::True: return negated ? F : T;
    case Kind::False: return negated ? T : F;
    case Kind::Not: return nnf(f.child(0), !negated);
    case Kind::And:
      return negated ? nnf(f.child(0), true) || nnf(f.child(1), true) : nnf(f.child(0), false) && nnf(f.child(1), false);
    case Kind::Or:
      return negated ? nnf(f.child(0), true) && nnf(f.child(1), true) : nnf(f.child(0), false) || nnf(f.child(1), false);
    case Kind::Implies:
      return negated ? nnf(f.child(0), false) && nnf(f.child(1), true) : nnf(f.child(0), true) || nnf(f.child(1), false);
    case Kind::Iff: {
      const Formula& a = f.child(0);
      const Formula& b = f.child(1);
      if (negated) return (nnf(a, false) && nnf(b, true)) || (nnf(a, true) && nnf(b, false));
      return (nnf(a, false) && nnf(b, false)) || (nnf(a, true) && nnf(b, true));
    }
    case Kind::Next: return next(nnf(f.child(0), negated));
    case Kind::Until:
      return negated ? release(nnf(f.child(0), true), nnf(f.child(1), true))
                     : until(nnf(f.child(0), false), nnf(f.child(1), false));
    case Kind::Release:
      return negated ? until(nnf(f.child(0), true), nnf(f.child(1), true))
                     : release(nnf(f.child(0), false), nnf(f.child(1), false));
    case Kind::Finally:
      // F a = true U a, !F a = false R !a
      return negated ? release(F, nnf(f.child(0), true)) : until(T, nnf(f.child(0), false));
    case Kind::Globally:
      // G a = false R a, !G a = true U !a
      return negated ? until(T, nnf(f.child(0), true)) : release(F, nnf(f.child(0), false));
  }
  return f;
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

Formula negate(const Formula& f) { return nnf(f, true); }

Formula assemble_spec(const std::vector<Formula>& assumptions, const std::vector<Formula>& guarantees) {
  auto conjoin = [](const std::vector<Formula>& parts) {
    if (parts.empty()) return Formula::constant(true);
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = acc && parts[i];
    return acc;
  };
  if (assumptions.empty()) return conjoin(guarantees);
  return implies(conjoin(assumptions), conjoin(guarantees));
}

}  // namespace boundsyn::ltl
