#pragma once
// Concrete syntax for fractional-tier programs, values and types.
// Whitespace-insensitive S-expressions:
//
//   ty    ::= "0" | "1" | "(+ ty ty)" | "(* ty ty)" | "(/ val : ty)"
//   val   ::= "tt" | "(inl val)" | "(inr val)" | "(val , val)" | "gc"
//   comb  ::= prim "@" ty | "(; comb comb)" | "(p+ comb comb)"
//           | "(p* comb comb)" | "(eta val : ty)" | "(eps val : ty)"
//   prim  ::= id | swap+ | assocl+ | assocr+ | unite+l | uniti+l
//           | swap* | assocl* | assocr* | unite*l | uniti*l
//           | absorbr | factorzl | dist | factor
//
// Every primitive is annotated with its domain, which determines the full
// instantiation — except factorzl, whose domain 0 fixes nothing, so it is
// annotated with its codomain 0*t. F and T are accepted as value sugar for
// (inl tt) and (inr tt); printing always emits canonical form.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pifrac/frac.hpp"

namespace pifrac {

namespace detail {

struct Token {
  enum class K { LParen, RParen, Atom, Comma, Colon, At, End };
  K kind;
  std::string text;
  int line;
  int col;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  const auto advance = [&](char ch) {
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      advance(ch);
      ++i;
      continue;
    }
    const int tl = line, tc = col;
    switch (ch) {
      case '(': out.push_back({Token::K::LParen, "(", tl, tc}); advance(ch); ++i; continue;
      case ')': out.push_back({Token::K::RParen, ")", tl, tc}); advance(ch); ++i; continue;
      case ',': out.push_back({Token::K::Comma, ",", tl, tc}); advance(ch); ++i; continue;
      case ':': out.push_back({Token::K::Colon, ":", tl, tc}); advance(ch); ++i; continue;
      case '@': out.push_back({Token::K::At, "@", tl, tc}); advance(ch); ++i; continue;
      default: break;
    }
    std::string atom;
    while (i < src.size()) {
      const char c = src[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '(' || c == ')' ||
          c == ',' || c == ':' || c == '@')
        break;
      atom.push_back(c);
      advance(c);
      ++i;
    }
    out.push_back({Token::K::Atom, atom, tl, tc});
  }
  out.push_back({Token::K::End, "", line, col});
  return out;
}

inline bool is_prim_name(const std::string& s) {
  static const char* names[] = {"id",      "swap+",   "assocl+", "assocr+", "unite+l",
                                "uniti+l", "swap*",   "assocl*", "assocr*", "unite*l",
                                "uniti*l", "absorbr", "factorzl", "dist",   "factor"};
  for (const char* n : names)
    if (s == n) return true;
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  FracComb program() {
    FracComb c = comb();
    expect_end();
    return c;
  }

  FracVal value() {
    FracVal v = val();
    expect_end();
    return v;
  }

  FracTy type() {
    FracTy t = ty();
    expect_end();
    return t;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw SyntaxError(t.line, t.col, msg);
  }

  void expect(Token::K k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Token::K::End) fail(peek(), "trailing input after program");
  }

  // Re-raises construction errors with the position of the current form.
  template <typename F>
  auto at(const Token& t, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const SyntaxError&) {
      throw;
    } catch (const TypeMismatch& e) {
      throw TypeMismatch("at " + std::to_string(t.line) + ":" + std::to_string(t.col),
                         e.expected, e.found);
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  FracTy ty() {
    const Token& t = peek();
    if (t.kind == Token::K::Atom) {
      if (t.text == "0") { ++pos_; return FracTy::zero(); }
      if (t.text == "1") { ++pos_; return FracTy::one(); }
      fail(t, "expected a type, found '" + t.text + "'");
    }
    if (t.kind != Token::K::LParen) fail(t, "expected a type");
    ++pos_;
    const Token& head = peek();
    if (head.kind != Token::K::Atom) fail(head, "expected +, * or / after '('");
    if (head.text == "+" || head.text == "*") {
      ++pos_;
      FracTy a = ty();
      FracTy b = ty();
      expect(Token::K::RParen, "')'");
      return head.text == "+" ? FracTy::sum(a, b) : FracTy::prod(a, b);
    }
    if (head.text == "/") {
      ++pos_;
      FracVal v = val();
      expect(Token::K::Colon, "':' in fraction type");
      FracTy base = ty();
      expect(Token::K::RParen, "')'");
      return at(head, [&] { return FracTy::frac(base, v); });
    }
    fail(head, "expected +, * or / after '(', found '" + head.text + "'");
  }

  FracVal val() {
    const Token& t = peek();
    if (t.kind == Token::K::Atom) {
      if (t.text == "tt") { ++pos_; return FracVal::unit(); }
      if (t.text == "gc") { ++pos_; return FracVal::gc(); }
      if (t.text == "F" || t.text == "\xF0\x9D\x94\xBD") {
        ++pos_;
        return FracVal::boolean(false);
      }
      if (t.text == "T" || t.text == "\xF0\x9D\x95\x8B") {
        ++pos_;
        return FracVal::boolean(true);
      }
      fail(t, "expected a value, found '" + t.text + "'");
    }
    if (t.kind != Token::K::LParen) fail(t, "expected a value");
    ++pos_;
    if (peek().kind == Token::K::Atom &&
        (peek().text == "inl" || peek().text == "inr")) {
      const bool left = next().text == "inl";
      FracVal v = val();
      expect(Token::K::RParen, "')'");
      return left ? FracVal::inl(v) : FracVal::inr(v);
    }
    FracVal a = val();
    expect(Token::K::Comma, "',' in pair");
    FracVal b = val();
    expect(Token::K::RParen, "')'");
    return FracVal::pair(a, b);
  }

  FracComb prim(const Token& name) {
    expect(Token::K::At, "'@' type annotation after primitive");
    FracTy anno = ty();
    return at(name, [&]() -> FracComb {
      const std::string& p = name.text;
      const auto want = [&](const char* shape) -> TypeMismatch {
        return TypeMismatch(p, shape, to_string(anno));
      };
      using K = FracTy::Kind;
      if (p == "id") return FracComb::id(anno);
      if (p == "swap+") {
        if (anno.kind() != K::Sum) throw want("(+ _ _)");
        return FracComb::swap_plus(anno.left(), anno.right());
      }
      if (p == "assocl+") {
        if (anno.kind() != K::Sum || anno.right().kind() != K::Sum)
          throw want("(+ _ (+ _ _))");
        return FracComb::assocl_plus(anno.left(), anno.right().left(),
                                     anno.right().right());
      }
      if (p == "assocr+") {
        if (anno.kind() != K::Sum || anno.left().kind() != K::Sum)
          throw want("(+ (+ _ _) _)");
        return FracComb::assocr_plus(anno.left().left(), anno.left().right(),
                                     anno.right());
      }
      if (p == "unite+l") {
        if (anno.kind() != K::Sum || anno.left().kind() != K::Zero) throw want("(+ 0 _)");
        return FracComb::unite_plus_l(anno.right());
      }
      if (p == "uniti+l") return FracComb::uniti_plus_l(anno);
      if (p == "swap*") {
        if (anno.kind() != K::Prod) throw want("(* _ _)");
        return FracComb::swap_times(anno.left(), anno.right());
      }
      if (p == "assocl*") {
        if (anno.kind() != K::Prod || anno.right().kind() != K::Prod)
          throw want("(* _ (* _ _))");
        return FracComb::assocl_times(anno.left(), anno.right().left(),
                                      anno.right().right());
      }
      if (p == "assocr*") {
        if (anno.kind() != K::Prod || anno.left().kind() != K::Prod)
          throw want("(* (* _ _) _)");
        return FracComb::assocr_times(anno.left().left(), anno.left().right(),
                                      anno.right());
      }
      if (p == "unite*l") {
        if (anno.kind() != K::Prod || anno.left().kind() != K::One) throw want("(* 1 _)");
        return FracComb::unite_times_l(anno.right());
      }
      if (p == "uniti*l") return FracComb::uniti_times_l(anno);
      if (p == "absorbr") {
        if (anno.kind() != K::Prod || anno.left().kind() != K::Zero) throw want("(* 0 _)");
        return FracComb::absorbr(anno.right());
      }
      if (p == "factorzl") {
        // annotated with the codomain; the domain 0 underdetermines t
        if (anno.kind() != K::Prod || anno.left().kind() != K::Zero) throw want("(* 0 _)");
        return FracComb::factorzl(anno.right());
      }
      if (p == "dist") {
        if (anno.kind() != K::Prod || anno.left().kind() != K::Sum)
          throw want("(* (+ _ _) _)");
        return FracComb::dist(anno.left().left(), anno.left().right(), anno.right());
      }
      if (p == "factor") {
        if (anno.kind() != K::Sum || anno.left().kind() != K::Prod ||
            anno.right().kind() != K::Prod)
          throw want("(+ (* _ _) (* _ _))");
        if (anno.left().right() != anno.right().right())
          throw TypeMismatch("factor: shared component disagrees",
                             to_string(anno.left().right()),
                             to_string(anno.right().right()));
        return FracComb::factor(anno.left().left(), anno.right().left(),
                                anno.left().right());
      }
      throw want("a primitive");
    });
  }

  FracComb comb() {
    const Token& t = peek();
    if (t.kind == Token::K::Atom && is_prim_name(t.text)) {
      ++pos_;
      return prim(t);
    }
    if (t.kind != Token::K::LParen)
      fail(t, "expected a combinator" +
                  (t.kind == Token::K::Atom ? ", found '" + t.text + "'" : std::string()));
    ++pos_;
    const Token& head = peek();
    if (head.kind != Token::K::Atom)
      fail(head, "expected ;, p+, p*, eta or eps after '('");
    if (head.text == ";" || head.text == "p+" || head.text == "p*") {
      ++pos_;
      FracComb a = comb();
      FracComb b = comb();
      expect(Token::K::RParen, "')'");
      return at(head, [&] {
        if (head.text == ";") return FracComb::seq(a, b);
        if (head.text == "p+") return FracComb::plus(a, b);
        return FracComb::times(a, b);
      });
    }
    if (head.text == "eta" || head.text == "eps") {
      ++pos_;
      FracVal v = val();
      expect(Token::K::Colon, "':' in eta/eps");
      FracTy ty_ = ty();
      expect(Token::K::RParen, "')'");
      return at(head, [&] {
        return head.text == "eta" ? FracComb::eta(v, ty_) : FracComb::eps(v, ty_);
      });
    }
    fail(head, "expected ;, p+, p*, eta or eps, found '" + head.text + "'");
  }
};

}  // namespace detail

inline FracComb parse_program(std::string_view src) {
  return detail::Parser(src).program();
}

inline FracVal parse_value_text(std::string_view src) {
  return detail::Parser(src).value();
}

inline FracTy parse_type_text(std::string_view src) { return detail::Parser(src).type(); }

// Canonical printing: parse(to_text(c)) == c, and to_text(parse(s)) is the
// canonical rendering of s.
inline std::string to_text(const FracComb& c) {
  using K = FracComb::Kind;
  const auto prim = [&](const char* name, const FracTy& anno) {
    return std::string(name) + " @ " + to_string(anno);
  };
  switch (c.kind()) {
    case K::Id: return prim("id", c.dom());
    case K::UnitePlusL: return prim("unite+l", c.dom());
    case K::UnitiPlusL: return prim("uniti+l", c.dom());
    case K::SwapPlus: return prim("swap+", c.dom());
    case K::AssoclPlus: return prim("assocl+", c.dom());
    case K::AssocrPlus: return prim("assocr+", c.dom());
    case K::UniteTimesL: return prim("unite*l", c.dom());
    case K::UnitiTimesL: return prim("uniti*l", c.dom());
    case K::SwapTimes: return prim("swap*", c.dom());
    case K::AssoclTimes: return prim("assocl*", c.dom());
    case K::AssocrTimes: return prim("assocr*", c.dom());
    case K::Absorbr: return prim("absorbr", c.dom());
    case K::Factorzl: return prim("factorzl", c.cod());
    case K::Dist: return prim("dist", c.dom());
    case K::Factor: return prim("factor", c.dom());
    case K::Seq:
      return "(; " + to_text(c.first()) + " " + to_text(c.second()) + ")";
    case K::Plus:
      return "(p+ " + to_text(c.first()) + " " + to_text(c.second()) + ")";
    case K::Times:
      return "(p* " + to_text(c.first()) + " " + to_text(c.second()) + ")";
    case K::Eta:
      return "(eta " + to_string(c.tag_value()) + " : " + to_string(c.tag_type()) + ")";
    case K::Eps:
      return "(eps " + to_string(c.tag_value()) + " : " + to_string(c.tag_type()) + ")";
  }
  return "?";
}

inline std::string to_text(const Comb& c) { return to_text(embed(c)); }

}  // namespace pifrac
