#include "flowkit/predicate.hpp"

#include <cctype>
#include <sstream>

#include "flowkit/algebra.hpp"
#include "flowkit/universe.hpp"
#include "flowkit/zf.hpp"

namespace flow {

namespace {

struct Token {
  enum class Kind { Ident, Eq, Neq, LParen, RParen, Comma, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", start};
    char c = text_[pos_];
    if (c == '(') { ++pos_; return {Token::Kind::LParen, "(", start}; }
    if (c == ')') { ++pos_; return {Token::Kind::RParen, ")", start}; }
    if (c == ',') { ++pos_; return {Token::Kind::Comma, ",", start}; }
    if (c == '=') { ++pos_; return {Token::Kind::Eq, "=", start}; }
    if (c == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      pos_ += 2;
      return {Token::Kind::Neq, "!=", start};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_'))
        ++end;
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      return {Token::Kind::Ident, word, start};
    }
    throw FlowError(Errc::SyntaxError,
                    "unexpected character '" + std::string(1, c) +
                        "' at position " + std::to_string(start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text,
         const std::unordered_map<std::string, TermId>& bindings)
      : lexer_(text), bindings_(bindings) {
    advance();
  }

  PredPtr parse() {
    PredPtr p = parse_or();
    expect(Token::Kind::End, "end of formula");
    return p;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    throw FlowError(Errc::SyntaxError,
                    "expected " + expected + " at position " +
                        std::to_string(tok_.pos) + ", found '" + tok_.text +
                        "'");
  }

  void expect(Token::Kind kind, const std::string& what) {
    if (tok_.kind != kind) fail(what);
  }

  bool accept_word(const char* word) {
    if (tok_.kind == Token::Kind::Ident && tok_.text == word) {
      advance();
      return true;
    }
    return false;
  }

  static PredPtr make(PredicateAst::Kind kind, PredPtr l = nullptr,
                      PredPtr r = nullptr) {
    auto node = std::make_shared<PredicateAst>();
    node->kind = kind;
    node->left = std::move(l);
    node->right = std::move(r);
    return node;
  }

  TermRef parse_termref() {
    expect(Token::Kind::Ident, "a term reference");
    std::string word = tok_.text;
    std::size_t pos = tok_.pos;
    advance();
    TermRef ref;
    ref.text = word;
    if (word == "zero") {
      ref.kind = TermRef::Kind::Zero;
    } else if (word == "one") {
      ref.kind = TermRef::Kind::One;
    } else if (word == "x") {
      ref.kind = TermRef::Kind::Var;
    } else if (word == "self") {
      ref.kind = TermRef::Kind::Self;
    } else if (word.size() > 3 && word.compare(0, 3, "phi") == 0 &&
               word.find_first_not_of("0123456789", 3) == std::string::npos) {
      ref.kind = TermRef::Kind::Phi;
      ref.phi_index = std::stoul(word.substr(3));
    } else {
      auto it = bindings_.find(word);
      if (it == bindings_.end())
        throw FlowError(Errc::UnboundName,
                        "'" + word + "' at position " + std::to_string(pos));
      ref.kind = TermRef::Kind::Bound;
      ref.bound = it->second;
    }
    return ref;
  }

  PredPtr parse_atom() {
    if (accept_word("true")) return make(PredicateAst::Kind::True);
    if (accept_word("false")) return make(PredicateAst::Kind::False);
    if (tok_.kind == Token::Kind::LParen) {
      advance();
      PredPtr p = parse_or();
      expect(Token::Kind::RParen, "')'");
      advance();
      return p;
    }
    if (tok_.kind != Token::Kind::Ident) fail("an atom");
    if (tok_.text == "E" || tok_.text == "Z") {
      bool emergent = tok_.text == "E";
      advance();
      expect(Token::Kind::LParen, "'('");
      advance();
      if (!accept_word("x")) fail("'x'");
      expect(Token::Kind::RParen, "')'");
      advance();
      return make(emergent ? PredicateAst::Kind::IsEmergent
                           : PredicateAst::Kind::IsZfSet);
    }
    if (tok_.text == "acts") {
      advance();
      expect(Token::Kind::LParen, "'('");
      advance();
      auto node = std::make_shared<PredicateAst>();
      if (accept_word("x")) {
        node->kind = PredicateAst::Kind::XActsOn;
        expect(Token::Kind::Comma, "','");
        advance();
        node->ref = parse_termref();
      } else {
        node->kind = PredicateAst::Kind::ActsOnX;
        node->ref = parse_termref();
        expect(Token::Kind::Comma, "','");
        advance();
        if (!accept_word("x")) fail("'x'");
      }
      expect(Token::Kind::RParen, "')'");
      advance();
      return node;
    }
    if (tok_.text == "subset") {
      advance();
      expect(Token::Kind::LParen, "'('");
      advance();
      if (!accept_word("x")) fail("'x'");
      expect(Token::Kind::Comma, "','");
      advance();
      auto node = std::make_shared<PredicateAst>();
      node->kind = PredicateAst::Kind::SubsetOf;
      node->ref = parse_termref();
      expect(Token::Kind::RParen, "')'");
      advance();
      return node;
    }
    if (tok_.text == "x") {
      advance();
      bool neq;
      if (tok_.kind == Token::Kind::Eq) neq = false;
      else if (tok_.kind == Token::Kind::Neq) neq = true;
      else fail("'=' or '!='");
      advance();
      auto node = std::make_shared<PredicateAst>();
      node->kind = neq ? PredicateAst::Kind::Neq : PredicateAst::Kind::Eq;
      node->ref = parse_termref();
      return node;
    }
    fail("an atom");
  }

  PredPtr parse_unary() {
    if (accept_word("not")) return make(PredicateAst::Kind::Not, parse_unary());
    return parse_atom();
  }

  PredPtr parse_and() {
    PredPtr p = parse_unary();
    while (accept_word("and"))
      p = make(PredicateAst::Kind::And, p, parse_unary());
    return p;
  }

  PredPtr parse_or() {
    PredPtr p = parse_and();
    while (accept_word("or")) p = make(PredicateAst::Kind::Or, p, parse_and());
    return p;
  }

  Lexer lexer_;
  Token tok_;
  const std::unordered_map<std::string, TermId>& bindings_;
};

std::string ref_text(const TermRef& ref) {
  switch (ref.kind) {
    case TermRef::Kind::Zero: return "zero";
    case TermRef::Kind::One: return "one";
    case TermRef::Kind::Var: return "x";
    case TermRef::Kind::Self: return "self";
    case TermRef::Kind::Phi: return "phi" + std::to_string(ref.phi_index);
    case TermRef::Kind::Bound: return ref.text;
  }
  return "?";
}

// nullopt: the reference is "self", inert by the restriction definition's
// exclusion of t = g. "x" resolves to the evaluation variable t.
std::optional<TermId> resolve_ref(const TermRef& ref, TermId t, Universe& u) {
  switch (ref.kind) {
    case TermRef::Kind::Zero: return Universe::zero();
    case TermRef::Kind::One: return Universe::one();
    case TermRef::Kind::Var: return t;
    case TermRef::Kind::Phi: return phi(u, ref.phi_index);
    case TermRef::Kind::Self: return std::nullopt;
    case TermRef::Kind::Bound: return ref.bound;
  }
  return std::nullopt;
}

}  // namespace

PredPtr parse_predicate(
    std::string_view text,
    const std::unordered_map<std::string, TermId>& bindings) {
  return Parser(text, bindings).parse();
}

std::string print_predicate(const PredicateAst& p) {
  using K = PredicateAst::Kind;
  switch (p.kind) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Eq: return "x = " + ref_text(p.ref);
    case K::Neq: return "x != " + ref_text(p.ref);
    case K::IsEmergent: return "E(x)";
    case K::IsZfSet: return "Z(x)";
    case K::ActsOnX: return "acts(" + ref_text(p.ref) + ", x)";
    case K::XActsOn: return "acts(x, " + ref_text(p.ref) + ")";
    case K::SubsetOf: return "subset(x, " + ref_text(p.ref) + ")";
    case K::Not: return "not (" + print_predicate(*p.left) + ")";
    case K::And:
      return "(" + print_predicate(*p.left) + " and " +
             print_predicate(*p.right) + ")";
    case K::Or:
      return "(" + print_predicate(*p.left) + " or " +
             print_predicate(*p.right) + ")";
  }
  return "?";
}

bool ast_equal(const PredicateAst& a, const PredicateAst& b) {
  if (a.kind != b.kind) return false;
  using K = PredicateAst::Kind;
  switch (a.kind) {
    case K::Eq:
    case K::Neq:
    case K::ActsOnX:
    case K::XActsOn:
    case K::SubsetOf: {
      if (a.ref.kind != b.ref.kind) return false;
      if (a.ref.kind == TermRef::Kind::Phi)
        return a.ref.phi_index == b.ref.phi_index;
      if (a.ref.kind == TermRef::Kind::Bound) return a.ref.bound == b.ref.bound;
      return true;
    }
    case K::Not: return ast_equal(*a.left, *b.left);
    case K::And:
    case K::Or:
      return ast_equal(*a.left, *b.left) && ast_equal(*a.right, *b.right);
    default: return true;
  }
}

bool eval_predicate(const PredicateAst& p, TermId t, Universe& u) {
  using K = PredicateAst::Kind;
  switch (p.kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Eq: {
      auto ref = resolve_ref(p.ref, t, u);
      return ref.has_value() && t == *ref;
    }
    case K::Neq: {
      auto ref = resolve_ref(p.ref, t, u);
      return !ref.has_value() || t != *ref;
    }
    case K::IsEmergent: return is_emergent(u, t);
    case K::IsZfSet: return is_zf_set(u, t);
    case K::ActsOnX: {
      auto ref = resolve_ref(p.ref, t, u);
      return ref.has_value() && u.acts_on(*ref, t);
    }
    case K::XActsOn: {
      auto ref = resolve_ref(p.ref, t, u);
      return ref.has_value() && u.acts_on(t, *ref);
    }
    case K::SubsetOf: {
      auto ref = resolve_ref(p.ref, t, u);
      return ref.has_value() && is_restriction(u, t, *ref);
    }
    case K::Not: return !eval_predicate(*p.left, t, u);
    case K::And:
      return eval_predicate(*p.left, t, u) && eval_predicate(*p.right, t, u);
    case K::Or:
      return eval_predicate(*p.left, t, u) || eval_predicate(*p.right, t, u);
  }
  return false;
}

AlphaMap AlphaMap::identity() {
  AlphaMap a;
  a.kind = Kind::Identity;
  return a;
}

AlphaMap AlphaMap::inverse_of(TermId c) {
  AlphaMap a;
  a.kind = Kind::InverseOf;
  a.ref = c;
  return a;
}

AlphaMap AlphaMap::constant_to(TermId k) {
  AlphaMap a;
  a.kind = Kind::ConstantTo;
  a.ref = k;
  return a;
}

AlphaMap AlphaMap::of_entries(std::vector<std::pair<TermId, TermId>> entries) {
  AlphaMap a;
  a.kind = Kind::Entries;
  a.entries = std::move(entries);
  return a;
}

TermId AlphaMap::apply(const Universe& u, TermId x) const {
  switch (kind) {
    case Kind::Identity: return x;
    case Kind::ConstantTo: return ref;
    case Kind::InverseOf: {
      // alpha(x) = the unique t with c(t) = x; Zero when no preimage.
      std::optional<TermId> found;
      for (Entry e : u.node(ref).table) {
        if (e.image != x) continue;
        if (found.has_value())
          throw FlowError(Errc::AlphaNotFunctional,
                          "two preimages of " + u.display(x) + " under " +
                              u.display(ref));
        found = e.key;
      }
      return found.value_or(Universe::zero());
    }
    case Kind::Entries: {
      std::optional<TermId> found;
      for (const auto& [in, out] : entries) {
        if (in != x) continue;
        if (found.has_value() && *found != out)
          throw FlowError(Errc::AlphaNotFunctional,
                          "multiple images declared for " + u.display(x));
        found = out;
      }
      if (!found.has_value())
        throw FlowError(Errc::AlphaNotFunctional,
                        "no image declared for " + u.display(x));
      return *found;
    }
  }
  return Universe::zero();
}

}  // namespace flow
