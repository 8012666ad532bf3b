#pragma once
// Finite types (0, 1, sums, products) and their canonical values: the shared
// vocabulary of every tier of the language.

#include <cassert>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pifrac {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two pieces of syntax were combined at incompatible types.
struct TypeMismatch : Error {
  TypeMismatch(const std::string& where, std::string expected_, std::string found_)
      : Error(where + ": expected " + expected_ + ", found " + found_),
        expected(std::move(expected_)),
        found(std::move(found_)) {}
  std::string expected;
  std::string found;
};

// A value fed to an operation violates the operation's typing precondition.
struct IllTyped : Error {
  explicit IllTyped(const std::string& what) : Error(what) {}
};

// Pointed composition where the underlying types agree but the foci do not.
struct PointMismatch : Error {
  PointMismatch(const std::string& where, std::string expected_, std::string found_)
      : Error(where + ": focus mismatch: expected " + expected_ + ", found " + found_),
        expected(std::move(expected_)),
        found(std::move(found_)) {}
  std::string expected;
  std::string found;
};

struct SyntaxError : Error {
  SyntaxError(int line_, int col_, const std::string& what)
      : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) +
              ": " + what),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

// A finite type: 0 | 1 | t + t | t * t. Immutable shared tree.
class Ty {
 public:
  enum class Kind : std::uint8_t { Zero, One, Sum, Prod };

  static Ty zero();
  static Ty one();
  static Ty sum(Ty left, Ty right);
  static Ty prod(Ty left, Ty right);
  static Ty boolean();  // 1 + 1

  Kind kind() const;
  const Ty& left() const;   // Sum/Prod only
  const Ty& right() const;  // Sum/Prod only

 private:
  struct Node;
  explicit Ty(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Ty::Node {
  Kind kind;
  std::vector<Ty> kids;
};

inline Ty Ty::zero() {
  static const Ty t{std::make_shared<const Node>(Node{Kind::Zero, {}})};
  return t;
}

inline Ty Ty::one() {
  static const Ty t{std::make_shared<const Node>(Node{Kind::One, {}})};
  return t;
}

inline Ty Ty::sum(Ty left, Ty right) {
  return Ty{std::make_shared<const Node>(Node{Kind::Sum, {std::move(left), std::move(right)}})};
}

inline Ty Ty::prod(Ty left, Ty right) {
  return Ty{std::make_shared<const Node>(Node{Kind::Prod, {std::move(left), std::move(right)}})};
}

inline Ty Ty::boolean() {
  static const Ty b = sum(one(), one());
  return b;
}

inline Ty::Kind Ty::kind() const { return node_->kind; }

inline const Ty& Ty::left() const {
  assert(node_->kids.size() == 2);
  return node_->kids[0];
}

inline const Ty& Ty::right() const {
  assert(node_->kids.size() == 2);
  return node_->kids[1];
}

inline bool operator==(const Ty& a, const Ty& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Ty::Kind::Zero:
    case Ty::Kind::One:
      return true;
    case Ty::Kind::Sum:
    case Ty::Kind::Prod:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

inline bool operator!=(const Ty& a, const Ty& b) { return !(a == b); }

inline std::string to_string(const Ty& t) {
  switch (t.kind()) {
    case Ty::Kind::Zero: return "0";
    case Ty::Kind::One: return "1";
    case Ty::Kind::Sum: return "(+ " + to_string(t.left()) + " " + to_string(t.right()) + ")";
    case Ty::Kind::Prod: return "(* " + to_string(t.left()) + " " + to_string(t.right()) + ")";
  }
  return "?";
}

// Number of distinct values inhabiting the type.
inline std::uint64_t size_of(const Ty& t) {
  switch (t.kind()) {
    case Ty::Kind::Zero: return 0;
    case Ty::Kind::One: return 1;
    case Ty::Kind::Sum: return size_of(t.left()) + size_of(t.right());
    case Ty::Kind::Prod: return size_of(t.left()) * size_of(t.right());
  }
  return 0;
}

// A canonical-form value: tt | inl v | inr v | (v , v). The boolean
// convention is inl tt = false, inr tt = true at type 1 + 1.
class Val {
 public:
  enum class Kind : std::uint8_t { Unit, InL, InR, Pair };

  static Val unit();
  static Val inl(Val v);
  static Val inr(Val v);
  static Val pair(Val fst, Val snd);
  static Val boolean(bool b);

  Kind kind() const;
  const Val& child() const;  // InL/InR only
  const Val& fst() const;    // Pair only
  const Val& snd() const;    // Pair only

 private:
  struct Node;
  explicit Val(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Val::Node {
  Kind kind;
  std::vector<Val> kids;
};

inline Val Val::unit() {
  static const Val v{std::make_shared<const Node>(Node{Kind::Unit, {}})};
  return v;
}

inline Val Val::inl(Val v) {
  return Val{std::make_shared<const Node>(Node{Kind::InL, {std::move(v)}})};
}

inline Val Val::inr(Val v) {
  return Val{std::make_shared<const Node>(Node{Kind::InR, {std::move(v)}})};
}

inline Val Val::pair(Val fst, Val snd) {
  return Val{std::make_shared<const Node>(Node{Kind::Pair, {std::move(fst), std::move(snd)}})};
}

inline Val Val::boolean(bool b) { return b ? inr(unit()) : inl(unit()); }

inline Val::Kind Val::kind() const { return node_->kind; }

inline const Val& Val::child() const {
  assert(node_->kids.size() == 1);
  return node_->kids[0];
}

inline const Val& Val::fst() const {
  assert(node_->kids.size() == 2);
  return node_->kids[0];
}

inline const Val& Val::snd() const {
  assert(node_->kids.size() == 2);
  return node_->kids[1];
}

inline bool operator==(const Val& a, const Val& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Val::Kind::Unit: return true;
    case Val::Kind::InL:
    case Val::Kind::InR:
      return a.child() == b.child();
    case Val::Kind::Pair:
      return a.fst() == b.fst() && a.snd() == b.snd();
  }
  return false;
}

inline bool operator!=(const Val& a, const Val& b) { return !(a == b); }

inline std::string to_string(const Val& v) {
  switch (v.kind()) {
    case Val::Kind::Unit: return "tt";
    case Val::Kind::InL: return "(inl " + to_string(v.child()) + ")";
    case Val::Kind::InR: return "(inr " + to_string(v.child()) + ")";
    case Val::Kind::Pair: return "(" + to_string(v.fst()) + " , " + to_string(v.snd()) + ")";
  }
  return "?";
}

inline bool has_type(const Val& v, const Ty& t) {
  switch (v.kind()) {
    case Val::Kind::Unit: return t.kind() == Ty::Kind::One;
    case Val::Kind::InL: return t.kind() == Ty::Kind::Sum && has_type(v.child(), t.left());
    case Val::Kind::InR: return t.kind() == Ty::Kind::Sum && has_type(v.child(), t.right());
    case Val::Kind::Pair:
      return t.kind() == Ty::Kind::Prod && has_type(v.fst(), t.left()) &&
             has_type(v.snd(), t.right());
  }
  return false;
}

// All values of a type, in a fixed order: a sum lists every inl before every
// inr; a product iterates the left component as the outer loop. The order is
// load-bearing: truth tables and test transcripts reproduce byte for byte.
inline std::vector<Val> enumerate(const Ty& t) {
  switch (t.kind()) {
    case Ty::Kind::Zero:
      return {};
    case Ty::Kind::One:
      return {Val::unit()};
    case Ty::Kind::Sum: {
      std::vector<Val> out;
      for (const Val& v : enumerate(t.left())) out.push_back(Val::inl(v));
      for (const Val& v : enumerate(t.right())) out.push_back(Val::inr(v));
      return out;
    }
    case Ty::Kind::Prod: {
      std::vector<Val> out;
      const std::vector<Val> ls = enumerate(t.left());
      const std::vector<Val> rs = enumerate(t.right());
      for (const Val& a : ls)
        for (const Val& b : rs) out.push_back(Val::pair(a, b));
      return out;
    }
  }
  return {};
}

}  // namespace pifrac
