#include "diaglab/formula.hpp"

#include <cctype>
#include <utility>

#include "diaglab/sat.hpp"

namespace diaglab {

namespace {

std::size_t mix_hash(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

bool valid_atom_name(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (!valid_atom_name(name))
    throw Error("invalid atom name: '" + name + "'");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->hash = mix_hash(std::hash<std::string>{}(name),
                     static_cast<std::size_t>(Kind::Atom));
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->left = std::move(f.node_);
  n->hash = mix_hash(n->left->hash, static_cast<std::size_t>(Kind::Not));
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->left = std::move(l.node_);
  n->right = std::move(r.node_);
  n->hash = mix_hash(mix_hash(n->left->hash, n->right->hash),
                     static_cast<std::size_t>(Kind::And));
  return Formula(std::move(n));
}
Formula Formula::disjunction(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->left = std::move(l.node_);
  n->right = std::move(r.node_);
  n->hash = mix_hash(mix_hash(n->left->hash, n->right->hash),
                     static_cast<std::size_t>(Kind::Or));
  return Formula(std::move(n));
}
Formula Formula::implication(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->left = std::move(l.node_);
  n->right = std::move(r.node_);
  n->hash = mix_hash(mix_hash(n->left->hash, n->right->hash),
                     static_cast<std::size_t>(Kind::Implies));
  return Formula(std::move(n));
}
Formula Formula::biconditional(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Iff;
  n->left = std::move(l.node_);
  n->right = std::move(r.node_);
  n->hash = mix_hash(mix_hash(n->left->hash, n->right->hash),
                     static_cast<std::size_t>(Kind::Iff));
  return Formula(std::move(n));
}

bool Formula::operator==(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Atom:
      return a->name == b->name;
    case Kind::Not:
      return Formula(a->left) == Formula(b->left);
    default:
      return Formula(a->left) == Formula(b->left) &&
             Formula(a->right) == Formula(b->right);
  }
}

// --- parser -----------------------------------------------------------

namespace {

enum class Tok { Ident, Bang, Amp, Pipe, Arrow, DArrow, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        advance();
      return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), line,
              col};
    }
    switch (c) {
      case '!':
        advance();
        return {Tok::Bang, "!", line, col};
      case '&':
        advance();
        return {Tok::Amp, "&", line, col};
      case '|':
        advance();
        return {Tok::Pipe, "|", line, col};
      case '(':
        advance();
        return {Tok::LParen, "(", line, col};
      case ')':
        advance();
        return {Tok::RParen, ")", line, col};
      case '-':
        advance();
        if (pos_ < src_.size() && src_[pos_] == '>') {
          advance();
          return {Tok::Arrow, "->", line, col};
        }
        throw ParseError("unknown token '-'", line, col);
      case '<':
        advance();
        if (pos_ + 1 < src_.size() && src_[pos_] == '-' &&
            src_[pos_ + 1] == '>') {
          advance();
          advance();
          return {Tok::DArrow, "<->", line, col};
        }
        throw ParseError("unknown token '<'", line, col);
      default:
        throw ParseError(std::string("unknown token '") + c + "'", line, col);
    }
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { shift(); }

  Formula parse() {
    Formula f = parse_iff();
    if (cur_.kind != Tok::End)
      throw ParseError("unexpected '" + cur_.text + "'", cur_.line, cur_.col);
    return f;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  Formula parse_iff() {  // right-associative
    Formula lhs = parse_imp();
    if (cur_.kind == Tok::DArrow) {
      shift();
      return Formula::biconditional(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  Formula parse_imp() {  // right-associative
    Formula lhs = parse_or();
    if (cur_.kind == Tok::Arrow) {
      shift();
      return Formula::implication(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (cur_.kind == Tok::Pipe) {
      shift();
      acc = Formula::disjunction(std::move(acc), parse_and());
    }
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (cur_.kind == Tok::Amp) {
      shift();
      acc = Formula::conjunction(std::move(acc), parse_unary());
    }
    return acc;
  }

  Formula parse_unary() {
    switch (cur_.kind) {
      case Tok::Bang: {
        shift();
        return Formula::negation(parse_unary());
      }
      case Tok::Ident: {
        Formula f = Formula::atom(cur_.text);
        shift();
        return f;
      }
      case Tok::LParen: {
        shift();
        Formula f = parse_iff();
        if (cur_.kind != Tok::RParen)
          throw ParseError("expected ')'", cur_.line, cur_.col);
        shift();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", cur_.line, cur_.col);
      default:
        throw ParseError("unexpected '" + cur_.text + "'", cur_.line,
                         cur_.col);
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 1, 1};
};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    case Formula::Kind::Not:
      return 5;
    case Formula::Kind::Atom:
      return 6;
  }
  return 6;
}

void print(const Formula& f, int parent_prec, std::string& out) {
  int prec = precedence(f.kind());
  bool paren = prec < parent_prec;
  if (paren) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      break;
    case Formula::Kind::Not:
      out += '!';
      print(f.left(), prec, out);
      break;
    case Formula::Kind::And:
      print(f.left(), prec, out);
      out += " & ";
      print(f.right(), prec + 1, out);
      break;
    case Formula::Kind::Or:
      print(f.left(), prec, out);
      out += " | ";
      print(f.right(), prec + 1, out);
      break;
    case Formula::Kind::Implies:
      print(f.left(), prec + 1, out);
      out += " -> ";
      print(f.right(), prec, out);
      break;
    case Formula::Kind::Iff:
      print(f.left(), prec + 1, out);
      out += " <-> ";
      print(f.right(), prec, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) {
  if (text.empty()) throw ParseError("empty input", 1, 1);
  return Parser(text).parse();
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      return;
    case Formula::Kind::Not:
      collect_atoms(f.left(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
  }
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool evaluate(const Formula& f,
              const std::function<bool(const std::string&)>& assignment) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return assignment(f.atom_name());
    case Formula::Kind::Not:
      return !evaluate(f.left(), assignment);
    case Formula::Kind::And:
      return evaluate(f.left(), assignment) && evaluate(f.right(), assignment);
    case Formula::Kind::Or:
      return evaluate(f.left(), assignment) || evaluate(f.right(), assignment);
    case Formula::Kind::Implies:
      return !evaluate(f.left(), assignment) ||
             evaluate(f.right(), assignment);
    case Formula::Kind::Iff:
      return evaluate(f.left(), assignment) == evaluate(f.right(), assignment);
  }
  return false;
}

bool is_consistent(const std::vector<Formula>& fs) {
  return sat::check(fs, {});
}

bool entails(const std::vector<Formula>& fs, const Formula& g) {
  std::vector<Formula> neg{g};
  return !sat::check(fs, neg);
}

}  // namespace diaglab
