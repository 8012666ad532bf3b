#pragma once
// The core combinator language: an AST of primitive type isomorphisms closed
// under sequential, additive and multiplicative composition. Every term is a
// permutation between the values of its domain and codomain.
//
// Primitives carry their type instantiation, so dom/cod are total accessors
// and ill-typed sequential compositions are rejected at construction.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pifrac/core.hpp"

namespace pifrac {

class Comb {
 public:
  enum class Kind : std::uint8_t {
    Id,
    UnitePlusL,   // 0 + t <-> t
    UnitiPlusL,   // t <-> 0 + t
    SwapPlus,     // a + b <-> b + a
    AssoclPlus,   // a + (b + c) <-> (a + b) + c
    AssocrPlus,   // (a + b) + c <-> a + (b + c)
    UniteTimesL,  // 1 * t <-> t
    UnitiTimesL,  // t <-> 1 * t
    SwapTimes,    // a * b <-> b * a
    AssoclTimes,  // a * (b * c) <-> (a * b) * c
    AssocrTimes,  // (a * b) * c <-> a * (b * c)
    Absorbr,      // 0 * t <-> 0
    Factorzl,     // 0 <-> 0 * t
    Dist,         // (a + b) * c <-> (a * c) + (b * c)
    Factor,       // (a * c) + (b * c) <-> (a + b) * c
    Seq,
    Plus,
    Times,
  };

  static Comb id(Ty t);
  static Comb unite_plus_l(Ty t);
  static Comb uniti_plus_l(Ty t);
  static Comb swap_plus(Ty a, Ty b);
  static Comb assocl_plus(Ty a, Ty b, Ty c);
  static Comb assocr_plus(Ty a, Ty b, Ty c);
  static Comb unite_times_l(Ty t);
  static Comb uniti_times_l(Ty t);
  static Comb swap_times(Ty a, Ty b);
  static Comb assocl_times(Ty a, Ty b, Ty c);
  static Comb assocr_times(Ty a, Ty b, Ty c);
  static Comb absorbr(Ty t);
  static Comb factorzl(Ty t);
  static Comb dist(Ty a, Ty b, Ty c);
  static Comb factor(Ty a, Ty b, Ty c);
  static Comb seq(Comb a, Comb b);  // throws TypeMismatch unless cod(a) = dom(b)
  static Comb plus(Comb a, Comb b);
  static Comb times(Comb a, Comb b);

  Kind kind() const;
  const Ty& dom() const;
  const Ty& cod() const;
  const Comb& first() const;   // Seq/Plus/Times only
  const Comb& second() const;  // Seq/Plus/Times only
  bool is_composite() const;

 private:
  struct Node;
  explicit Comb(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Comb make(Kind k, Ty dom, Ty cod, std::vector<Comb> kids = {});
  std::shared_ptr<const Node> node_;
};

struct Comb::Node {
  Kind kind;
  Ty dom;
  Ty cod;
  std::vector<Comb> kids;
};

inline Comb Comb::make(Kind k, Ty dom, Ty cod, std::vector<Comb> kids) {
  return Comb{std::make_shared<const Node>(
      Node{k, std::move(dom), std::move(cod), std::move(kids)})};
}

inline Comb Comb::id(Ty t) { return make(Kind::Id, t, t); }

inline Comb Comb::unite_plus_l(Ty t) {
  return make(Kind::UnitePlusL, Ty::sum(Ty::zero(), t), t);
}

inline Comb Comb::uniti_plus_l(Ty t) {
  return make(Kind::UnitiPlusL, t, Ty::sum(Ty::zero(), t));
}

inline Comb Comb::swap_plus(Ty a, Ty b) {
  return make(Kind::SwapPlus, Ty::sum(a, b), Ty::sum(b, a));
}

inline Comb Comb::assocl_plus(Ty a, Ty b, Ty c) {
  return make(Kind::AssoclPlus, Ty::sum(a, Ty::sum(b, c)), Ty::sum(Ty::sum(a, b), c));
}

inline Comb Comb::assocr_plus(Ty a, Ty b, Ty c) {
  return make(Kind::AssocrPlus, Ty::sum(Ty::sum(a, b), c), Ty::sum(a, Ty::sum(b, c)));
}

inline Comb Comb::unite_times_l(Ty t) {
  return make(Kind::UniteTimesL, Ty::prod(Ty::one(), t), t);
}

inline Comb Comb::uniti_times_l(Ty t) {
  return make(Kind::UnitiTimesL, t, Ty::prod(Ty::one(), t));
}

inline Comb Comb::swap_times(Ty a, Ty b) {
  return make(Kind::SwapTimes, Ty::prod(a, b), Ty::prod(b, a));
}

inline Comb Comb::assocl_times(Ty a, Ty b, Ty c) {
  return make(Kind::AssoclTimes, Ty::prod(a, Ty::prod(b, c)), Ty::prod(Ty::prod(a, b), c));
}

inline Comb Comb::assocr_times(Ty a, Ty b, Ty c) {
  return make(Kind::AssocrTimes, Ty::prod(Ty::prod(a, b), c), Ty::prod(a, Ty::prod(b, c)));
}

inline Comb Comb::absorbr(Ty t) {
  return make(Kind::Absorbr, Ty::prod(Ty::zero(), t), Ty::zero());
}

inline Comb Comb::factorzl(Ty t) {
  return make(Kind::Factorzl, Ty::zero(), Ty::prod(Ty::zero(), t));
}

inline Comb Comb::dist(Ty a, Ty b, Ty c) {
  return make(Kind::Dist, Ty::prod(Ty::sum(a, b), c),
              Ty::sum(Ty::prod(a, c), Ty::prod(b, c)));
}

inline Comb Comb::factor(Ty a, Ty b, Ty c) {
  return make(Kind::Factor, Ty::sum(Ty::prod(a, c), Ty::prod(b, c)),
              Ty::prod(Ty::sum(a, b), c));
}

inline Comb Comb::seq(Comb a, Comb b) {
  if (a.cod() != b.dom())
    throw TypeMismatch("sequential composition", to_string(a.cod()), to_string(b.dom()));
  Ty dom = a.dom();
  Ty cod = b.cod();
  return make(Kind::Seq, std::move(dom), std::move(cod), {std::move(a), std::move(b)});
}

inline Comb Comb::plus(Comb a, Comb b) {
  Ty dom = Ty::sum(a.dom(), b.dom());
  Ty cod = Ty::sum(a.cod(), b.cod());
  return make(Kind::Plus, std::move(dom), std::move(cod), {std::move(a), std::move(b)});
}

inline Comb Comb::times(Comb a, Comb b) {
  Ty dom = Ty::prod(a.dom(), b.dom());
  Ty cod = Ty::prod(a.cod(), b.cod());
  return make(Kind::Times, std::move(dom), std::move(cod), {std::move(a), std::move(b)});
}

inline Comb::Kind Comb::kind() const { return node_->kind; }
inline const Ty& Comb::dom() const { return node_->dom; }
inline const Ty& Comb::cod() const { return node_->cod; }

inline const Comb& Comb::first() const {
  assert(node_->kids.size() == 2);
  return node_->kids[0];
}

inline const Comb& Comb::second() const {
  assert(node_->kids.size() == 2);
  return node_->kids[1];
}

inline bool Comb::is_composite() const { return !node_->kids.empty(); }

inline bool operator==(const Comb& a, const Comb& b) {
  if (a.kind() != b.kind() || a.dom() != b.dom() || a.cod() != b.cod()) return false;
  if (!a.is_composite()) return true;
  return a.first() == b.first() && a.second() == b.second();
}

inline bool operator!=(const Comb& a, const Comb& b) { return !(a == b); }

inline std::pair<Ty, Ty> infer(const Comb& c) { return {c.dom(), c.cod()}; }

inline Val eval(const Comb& c, const Val& v) {
  const auto reject = [&]() -> IllTyped {
    return IllTyped("eval: value " + to_string(v) + " does not inhabit domain " +
                    to_string(c.dom()));
  };
  switch (c.kind()) {
    case Comb::Kind::Id:
      return v;
    case Comb::Kind::UnitePlusL:
      // inl is impossible: the left summand is empty.
      if (v.kind() == Val::Kind::InR) return v.child();
      throw reject();
    case Comb::Kind::UnitiPlusL:
      return Val::inr(v);
    case Comb::Kind::SwapPlus:
      if (v.kind() == Val::Kind::InL) return Val::inr(v.child());
      if (v.kind() == Val::Kind::InR) return Val::inl(v.child());
      throw reject();
    case Comb::Kind::AssoclPlus:
      if (v.kind() == Val::Kind::InL) return Val::inl(Val::inl(v.child()));
      if (v.kind() == Val::Kind::InR) {
        const Val& w = v.child();
        if (w.kind() == Val::Kind::InL) return Val::inl(Val::inr(w.child()));
        if (w.kind() == Val::Kind::InR) return Val::inr(w.child());
      }
      throw reject();
    case Comb::Kind::AssocrPlus:
      if (v.kind() == Val::Kind::InL) {
        const Val& w = v.child();
        if (w.kind() == Val::Kind::InL) return Val::inl(w.child());
        if (w.kind() == Val::Kind::InR) return Val::inr(Val::inl(w.child()));
      }
      if (v.kind() == Val::Kind::InR) return Val::inr(Val::inr(v.child()));
      throw reject();
    case Comb::Kind::UniteTimesL:
      if (v.kind() == Val::Kind::Pair && v.fst().kind() == Val::Kind::Unit) return v.snd();
      throw reject();
    case Comb::Kind::UnitiTimesL:
      return Val::pair(Val::unit(), v);
    case Comb::Kind::SwapTimes:
      if (v.kind() == Val::Kind::Pair) return Val::pair(v.snd(), v.fst());
      throw reject();
    case Comb::Kind::AssoclTimes:
      if (v.kind() == Val::Kind::Pair && v.snd().kind() == Val::Kind::Pair)
        return Val::pair(Val::pair(v.fst(), v.snd().fst()), v.snd().snd());
      throw reject();
    case Comb::Kind::AssocrTimes:
      if (v.kind() == Val::Kind::Pair && v.fst().kind() == Val::Kind::Pair)
        return Val::pair(v.fst().fst(), Val::pair(v.fst().snd(), v.snd()));
      throw reject();
    case Comb::Kind::Absorbr:
    case Comb::Kind::Factorzl:
      // Well-defined but unreachable: no value inhabits an empty domain.
      throw IllTyped("eval: no value inhabits " + to_string(c.dom()));
    case Comb::Kind::Dist:
      if (v.kind() == Val::Kind::Pair) {
        const Val& l = v.fst();
        if (l.kind() == Val::Kind::InL) return Val::inl(Val::pair(l.child(), v.snd()));
        if (l.kind() == Val::Kind::InR) return Val::inr(Val::pair(l.child(), v.snd()));
      }
      throw reject();
    case Comb::Kind::Factor:
      if (v.kind() == Val::Kind::InL && v.child().kind() == Val::Kind::Pair)
        return Val::pair(Val::inl(v.child().fst()), v.child().snd());
      if (v.kind() == Val::Kind::InR && v.child().kind() == Val::Kind::Pair)
        return Val::pair(Val::inr(v.child().fst()), v.child().snd());
      throw reject();
    case Comb::Kind::Seq:
      return eval(c.second(), eval(c.first(), v));
    case Comb::Kind::Plus:
      if (v.kind() == Val::Kind::InL) return Val::inl(eval(c.first(), v.child()));
      if (v.kind() == Val::Kind::InR) return Val::inr(eval(c.second(), v.child()));
      throw reject();
    case Comb::Kind::Times:
      if (v.kind() == Val::Kind::Pair)
        return Val::pair(eval(c.first(), v.fst()), eval(c.second(), v.snd()));
      throw reject();
  }
  throw reject();
}

// Syntactic inversion: each primitive maps to its dual, compositions reverse.
// An involution: invert(invert(c)) == c.
inline Comb invert(const Comb& c) {
  switch (c.kind()) {
    case Comb::Kind::Id:
      return c;
    case Comb::Kind::UnitePlusL:
      return Comb::uniti_plus_l(c.cod());
    case Comb::Kind::UnitiPlusL:
      return Comb::unite_plus_l(c.dom());
    case Comb::Kind::SwapPlus:
      return Comb::swap_plus(c.dom().right(), c.dom().left());
    case Comb::Kind::AssoclPlus:
      return Comb::assocr_plus(c.dom().left(), c.dom().right().left(),
                               c.dom().right().right());
    case Comb::Kind::AssocrPlus:
      return Comb::assocl_plus(c.dom().left().left(), c.dom().left().right(),
                               c.dom().right());
    case Comb::Kind::UniteTimesL:
      return Comb::uniti_times_l(c.cod());
    case Comb::Kind::UnitiTimesL:
      return Comb::unite_times_l(c.dom());
    case Comb::Kind::SwapTimes:
      return Comb::swap_times(c.dom().right(), c.dom().left());
    case Comb::Kind::AssoclTimes:
      return Comb::assocr_times(c.dom().left(), c.dom().right().left(),
                                c.dom().right().right());
    case Comb::Kind::AssocrTimes:
      return Comb::assocl_times(c.dom().left().left(), c.dom().left().right(),
                                c.dom().right());
    case Comb::Kind::Absorbr:
      return Comb::factorzl(c.dom().right());
    case Comb::Kind::Factorzl:
      return Comb::absorbr(c.cod().right());
    case Comb::Kind::Dist:
      return Comb::factor(c.dom().left().left(), c.dom().left().right(), c.dom().right());
    case Comb::Kind::Factor:
      return Comb::dist(c.cod().left().left(), c.cod().left().right(), c.cod().right());
    case Comb::Kind::Seq:
      return Comb::seq(invert(c.second()), invert(c.first()));
    case Comb::Kind::Plus:
      return Comb::plus(invert(c.first()), invert(c.second()));
    case Comb::Kind::Times:
      return Comb::times(invert(c.first()), invert(c.second()));
  }
  throw IllTyped("invert: unknown combinator");
}

// Adds a control bit in front of a dom-preserving combinator: the result
// applies c to the payload exactly when the control is true (inr tt).
inline Comb controlled(const Comb& c) {
  if (c.dom() != c.cod())
    throw TypeMismatch("controlled", to_string(c.dom()), to_string(c.cod()));
  const Ty one = Ty::one();
  const Ty t = c.dom();
  const Ty one_t = Ty::prod(one, t);
  return Comb::seq(
      Comb::dist(one, one, t),
      Comb::seq(Comb::plus(Comb::id(one_t), Comb::times(Comb::id(one), c)),
                Comb::factor(one, one, t)));
}

inline Comb not_gate() { return Comb::swap_plus(Ty::one(), Ty::one()); }
inline Comb cnot_gate() { return controlled(not_gate()); }
inline Comb toffoli_gate() { return controlled(cnot_gate()); }

}  // namespace pifrac
