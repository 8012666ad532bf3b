#pragma once
// The fractional extension of the core language. A fraction type 1/v is a
// first-class garbage-collection process specialized to reclaim exactly the
// value v; at runtime it is a single trivial token. eta allocates a value
// together with its collector, eps applies the collector. Deallocation
// safety is checked when eps runs: evaluation returns an absent result when
// the collector meets any value other than the one it was created for.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pifrac/comb.hpp"
#include "pifrac/core.hpp"

namespace pifrac {

class FracTy;

// Values of the fractional tier: the four core shapes plus the GC token.
class FracVal {
 public:
  enum class Kind : std::uint8_t { Unit, InL, InR, Pair, Gc };

  static FracVal unit();
  static FracVal inl(FracVal v);
  static FracVal inr(FracVal v);
  static FracVal pair(FracVal fst, FracVal snd);
  static FracVal gc();
  static FracVal boolean(bool b);

  Kind kind() const;
  const FracVal& child() const;
  const FracVal& fst() const;
  const FracVal& snd() const;

 private:
  struct Node;
  explicit FracVal(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FracVal::Node {
  Kind kind;
  std::vector<FracVal> kids;
};

inline FracVal FracVal::unit() {
  static const FracVal v{std::make_shared<const Node>(Node{Kind::Unit, {}})};
  return v;
}

inline FracVal FracVal::inl(FracVal v) {
  return FracVal{std::make_shared<const Node>(Node{Kind::InL, {std::move(v)}})};
}

inline FracVal FracVal::inr(FracVal v) {
  return FracVal{std::make_shared<const Node>(Node{Kind::InR, {std::move(v)}})};
}

inline FracVal FracVal::pair(FracVal fst, FracVal snd) {
  return FracVal{
      std::make_shared<const Node>(Node{Kind::Pair, {std::move(fst), std::move(snd)}})};
}

inline FracVal FracVal::gc() {
  static const FracVal v{std::make_shared<const Node>(Node{Kind::Gc, {}})};
  return v;
}

inline FracVal FracVal::boolean(bool b) { return b ? inr(unit()) : inl(unit()); }

inline FracVal::Kind FracVal::kind() const { return node_->kind; }

inline const FracVal& FracVal::child() const {
  assert(node_->kids.size() == 1);
  return node_->kids[0];
}

inline const FracVal& FracVal::fst() const {
  assert(node_->kids.size() == 2);
  return node_->kids[0];
}

inline const FracVal& FracVal::snd() const {
  assert(node_->kids.size() == 2);
  return node_->kids[1];
}

inline bool operator==(const FracVal& a, const FracVal& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FracVal::Kind::Unit:
    case FracVal::Kind::Gc:
      return true;
    case FracVal::Kind::InL:
    case FracVal::Kind::InR:
      return a.child() == b.child();
    case FracVal::Kind::Pair:
      return a.fst() == b.fst() && a.snd() == b.snd();
  }
  return false;
}

inline bool operator!=(const FracVal& a, const FracVal& b) { return !(a == b); }

inline std::string to_string(const FracVal& v) {
  switch (v.kind()) {
    case FracVal::Kind::Unit: return "tt";
    case FracVal::Kind::InL: return "(inl " + to_string(v.child()) + ")";
    case FracVal::Kind::InR: return "(inr " + to_string(v.child()) + ")";
    case FracVal::Kind::Pair:
      return "(" + to_string(v.fst()) + " , " + to_string(v.snd()) + ")";
    case FracVal::Kind::Gc: return "gc";
  }
  return "?";
}

// Types of the fractional tier. Frac(base, v) is written (/ v : base) and is
// inhabited only by the GC token. Fractions nest: a collector's type may
// itself be collected.
class FracTy {
 public:
  enum class Kind : std::uint8_t { Zero, One, Sum, Prod, Frac };

  static FracTy zero();
  static FracTy one();
  static FracTy sum(FracTy left, FracTy right);
  static FracTy prod(FracTy left, FracTy right);
  static FracTy frac(FracTy base, FracVal witness);  // witness must inhabit base
  static FracTy boolean();

  Kind kind() const;
  const FracTy& left() const;
  const FracTy& right() const;
  const FracTy& base() const;      // Frac only
  const FracVal& witness() const;  // Frac only

 private:
  struct Node;
  explicit FracTy(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FracTy::Node {
  Kind kind;
  std::vector<FracTy> kids;
  std::vector<FracVal> vals;  // Frac: the collected witness
};

bool has_type(const FracVal& v, const FracTy& t);
std::string to_string(const FracTy& t);

inline FracTy FracTy::zero() {
  static const FracTy t{std::make_shared<const Node>(Node{Kind::Zero, {}, {}})};
  return t;
}

inline FracTy FracTy::one() {
  static const FracTy t{std::make_shared<const Node>(Node{Kind::One, {}, {}})};
  return t;
}

inline FracTy FracTy::sum(FracTy left, FracTy right) {
  return FracTy{std::make_shared<const Node>(
      Node{Kind::Sum, {std::move(left), std::move(right)}, {}})};
}

inline FracTy FracTy::prod(FracTy left, FracTy right) {
  return FracTy{std::make_shared<const Node>(
      Node{Kind::Prod, {std::move(left), std::move(right)}, {}})};
}

inline FracTy FracTy::frac(FracTy base, FracVal witness) {
  if (!has_type(witness, base))
    throw TypeMismatch("fraction type", to_string(base), to_string(witness));
  return FracTy{std::make_shared<const Node>(
      Node{Kind::Frac, {std::move(base)}, {std::move(witness)}})};
}

inline FracTy FracTy::boolean() {
  static const FracTy b = sum(one(), one());
  return b;
}

inline FracTy::Kind FracTy::kind() const { return node_->kind; }

inline const FracTy& FracTy::left() const {
  assert(node_->kids.size() == 2);
  return node_->kids[0];
}

inline const FracTy& FracTy::right() const {
  assert(node_->kids.size() == 2);
  return node_->kids[1];
}

inline const FracTy& FracTy::base() const {
  assert(kind() == Kind::Frac);
  return node_->kids[0];
}

inline const FracVal& FracTy::witness() const {
  assert(kind() == Kind::Frac);
  return node_->vals[0];
}

inline bool operator==(const FracTy& a, const FracTy& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FracTy::Kind::Zero:
    case FracTy::Kind::One:
      return true;
    case FracTy::Kind::Sum:
    case FracTy::Kind::Prod:
      return a.left() == b.left() && a.right() == b.right();
    case FracTy::Kind::Frac:
      return a.base() == b.base() && a.witness() == b.witness();
  }
  return false;
}

inline bool operator!=(const FracTy& a, const FracTy& b) { return !(a == b); }

inline std::string to_string(const FracTy& t) {
  switch (t.kind()) {
    case FracTy::Kind::Zero: return "0";
    case FracTy::Kind::One: return "1";
    case FracTy::Kind::Sum:
      return "(+ " + to_string(t.left()) + " " + to_string(t.right()) + ")";
    case FracTy::Kind::Prod:
      return "(* " + to_string(t.left()) + " " + to_string(t.right()) + ")";
    case FracTy::Kind::Frac:
      return "(/ " + to_string(t.witness()) + " : " + to_string(t.base()) + ")";
  }
  return "?";
}

inline bool has_type(const FracVal& v, const FracTy& t) {
  // The GC token is the unique inhabitant of every fraction type.
  if (t.kind() == FracTy::Kind::Frac) return v.kind() == FracVal::Kind::Gc;
  switch (v.kind()) {
    case FracVal::Kind::Unit: return t.kind() == FracTy::Kind::One;
    case FracVal::Kind::InL:
      return t.kind() == FracTy::Kind::Sum && has_type(v.child(), t.left());
    case FracVal::Kind::InR:
      return t.kind() == FracTy::Kind::Sum && has_type(v.child(), t.right());
    case FracVal::Kind::Pair:
      return t.kind() == FracTy::Kind::Prod && has_type(v.fst(), t.left()) &&
             has_type(v.snd(), t.right());
    case FracVal::Kind::Gc:
      return false;
  }
  return false;
}

inline std::uint64_t size_of(const FracTy& t) {
  switch (t.kind()) {
    case FracTy::Kind::Zero: return 0;
    case FracTy::Kind::One: return 1;
    case FracTy::Kind::Sum: return size_of(t.left()) + size_of(t.right());
    case FracTy::Kind::Prod: return size_of(t.left()) * size_of(t.right());
    case FracTy::Kind::Frac: return 1;
  }
  return 0;
}

inline std::vector<FracVal> enumerate(const FracTy& t) {
  switch (t.kind()) {
    case FracTy::Kind::Zero:
      return {};
    case FracTy::Kind::One:
      return {FracVal::unit()};
    case FracTy::Kind::Sum: {
      std::vector<FracVal> out;
      for (const FracVal& v : enumerate(t.left())) out.push_back(FracVal::inl(v));
      for (const FracVal& v : enumerate(t.right())) out.push_back(FracVal::inr(v));
      return out;
    }
    case FracTy::Kind::Prod: {
      std::vector<FracVal> out;
      const std::vector<FracVal> ls = enumerate(t.left());
      const std::vector<FracVal> rs = enumerate(t.right());
      for (const FracVal& a : ls)
        for (const FracVal& b : rs) out.push_back(FracVal::pair(a, b));
      return out;
    }
    case FracTy::Kind::Frac:
      return {FracVal::gc()};
  }
  return {};
}

// Combinators over fractional types: every core constructor lifted, plus
// eta/eps. Both carry the witness value and its type; the codomain (for eta)
// and domain (for eps) are t * (/ v : t).
class FracComb {
 public:
  enum class Kind : std::uint8_t {
    Id,
    UnitePlusL,
    UnitiPlusL,
    SwapPlus,
    AssoclPlus,
    AssocrPlus,
    UniteTimesL,
    UnitiTimesL,
    SwapTimes,
    AssoclTimes,
    AssocrTimes,
    Absorbr,
    Factorzl,
    Dist,
    Factor,
    Seq,
    Plus,
    Times,
    Eta,
    Eps,
  };

  static FracComb id(FracTy t);
  static FracComb unite_plus_l(FracTy t);
  static FracComb uniti_plus_l(FracTy t);
  static FracComb swap_plus(FracTy a, FracTy b);
  static FracComb assocl_plus(FracTy a, FracTy b, FracTy c);
  static FracComb assocr_plus(FracTy a, FracTy b, FracTy c);
  static FracComb unite_times_l(FracTy t);
  static FracComb uniti_times_l(FracTy t);
  static FracComb swap_times(FracTy a, FracTy b);
  static FracComb assocl_times(FracTy a, FracTy b, FracTy c);
  static FracComb assocr_times(FracTy a, FracTy b, FracTy c);
  static FracComb absorbr(FracTy t);
  static FracComb factorzl(FracTy t);
  static FracComb dist(FracTy a, FracTy b, FracTy c);
  static FracComb factor(FracTy a, FracTy b, FracTy c);
  static FracComb seq(FracComb a, FracComb b);
  static FracComb plus(FracComb a, FracComb b);
  static FracComb times(FracComb a, FracComb b);
  static FracComb eta(FracVal v, FracTy t);
  static FracComb eps(FracVal v, FracTy t);

  Kind kind() const;
  const FracTy& dom() const;
  const FracTy& cod() const;
  const FracComb& first() const;
  const FracComb& second() const;
  bool is_composite() const;
  const FracVal& tag_value() const;  // Eta/Eps: the witness value
  const FracTy& tag_type() const;    // Eta/Eps: the witness type

 private:
  struct Node;
  explicit FracComb(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static FracComb make(Kind k, FracTy dom, FracTy cod, std::vector<FracComb> kids = {});
  std::shared_ptr<const Node> node_;
};

struct FracComb::Node {
  Kind kind;
  FracTy dom;
  FracTy cod;
  std::vector<FracComb> kids;
};

inline FracComb FracComb::make(Kind k, FracTy dom, FracTy cod, std::vector<FracComb> kids) {
  return FracComb{std::make_shared<const Node>(
      Node{k, std::move(dom), std::move(cod), std::move(kids)})};
}

inline FracComb FracComb::id(FracTy t) { return make(Kind::Id, t, t); }

inline FracComb FracComb::unite_plus_l(FracTy t) {
  return make(Kind::UnitePlusL, FracTy::sum(FracTy::zero(), t), t);
}

inline FracComb FracComb::uniti_plus_l(FracTy t) {
  return make(Kind::UnitiPlusL, t, FracTy::sum(FracTy::zero(), t));
}

inline FracComb FracComb::swap_plus(FracTy a, FracTy b) {
  return make(Kind::SwapPlus, FracTy::sum(a, b), FracTy::sum(b, a));
}

inline FracComb FracComb::assocl_plus(FracTy a, FracTy b, FracTy c) {
  return make(Kind::AssoclPlus, FracTy::sum(a, FracTy::sum(b, c)),
              FracTy::sum(FracTy::sum(a, b), c));
}

inline FracComb FracComb::assocr_plus(FracTy a, FracTy b, FracTy c) {
  return make(Kind::AssocrPlus, FracTy::sum(FracTy::sum(a, b), c),
              FracTy::sum(a, FracTy::sum(b, c)));
}

inline FracComb FracComb::unite_times_l(FracTy t) {
  return make(Kind::UniteTimesL, FracTy::prod(FracTy::one(), t), t);
}

inline FracComb FracComb::uniti_times_l(FracTy t) {
  return make(Kind::UnitiTimesL, t, FracTy::prod(FracTy::one(), t));
}

inline FracComb FracComb::swap_times(FracTy a, FracTy b) {
  return make(Kind::SwapTimes, FracTy::prod(a, b), FracTy::prod(b, a));
}

inline FracComb FracComb::assocl_times(FracTy a, FracTy b, FracTy c) {
  return make(Kind::AssoclTimes, FracTy::prod(a, FracTy::prod(b, c)),
              FracTy::prod(FracTy::prod(a, b), c));
}

inline FracComb FracComb::assocr_times(FracTy a, FracTy b, FracTy c) {
  return make(Kind::AssocrTimes, FracTy::prod(FracTy::prod(a, b), c),
              FracTy::prod(a, FracTy::prod(b, c)));
}

inline FracComb FracComb::absorbr(FracTy t) {
  return make(Kind::Absorbr, FracTy::prod(FracTy::zero(), t), FracTy::zero());
}

inline FracComb FracComb::factorzl(FracTy t) {
  return make(Kind::Factorzl, FracTy::zero(), FracTy::prod(FracTy::zero(), t));
}

inline FracComb FracComb::dist(FracTy a, FracTy b, FracTy c) {
  return make(Kind::Dist, FracTy::prod(FracTy::sum(a, b), c),
              FracTy::sum(FracTy::prod(a, c), FracTy::prod(b, c)));
}

inline FracComb FracComb::factor(FracTy a, FracTy b, FracTy c) {
  return make(Kind::Factor, FracTy::sum(FracTy::prod(a, c), FracTy::prod(b, c)),
              FracTy::prod(FracTy::sum(a, b), c));
}

inline FracComb FracComb::seq(FracComb a, FracComb b) {
  if (a.cod() != b.dom())
    throw TypeMismatch("sequential composition", to_string(a.cod()), to_string(b.dom()));
  FracTy dom = a.dom();
  FracTy cod = b.cod();
  return make(Kind::Seq, std::move(dom), std::move(cod), {std::move(a), std::move(b)});
}

inline FracComb FracComb::plus(FracComb a, FracComb b) {
  FracTy dom = FracTy::sum(a.dom(), b.dom());
  FracTy cod = FracTy::sum(a.cod(), b.cod());
  return make(Kind::Plus, std::move(dom), std::move(cod), {std::move(a), std::move(b)});
}

inline FracComb FracComb::times(FracComb a, FracComb b) {
  FracTy dom = FracTy::prod(a.dom(), b.dom());
  FracTy cod = FracTy::prod(a.cod(), b.cod());
  return make(Kind::Times, std::move(dom), std::move(cod), {std::move(a), std::move(b)});
}

inline FracComb FracComb::eta(FracVal v, FracTy t) {
  if (!has_type(v, t)) throw TypeMismatch("eta", to_string(t), to_string(v));
  FracTy cod = FracTy::prod(t, FracTy::frac(t, v));
  return make(Kind::Eta, FracTy::one(), std::move(cod));
}

inline FracComb FracComb::eps(FracVal v, FracTy t) {
  if (!has_type(v, t)) throw TypeMismatch("eps", to_string(t), to_string(v));
  FracTy dom = FracTy::prod(t, FracTy::frac(t, v));
  return make(Kind::Eps, std::move(dom), FracTy::one());
}

inline FracComb::Kind FracComb::kind() const { return node_->kind; }
inline const FracTy& FracComb::dom() const { return node_->dom; }
inline const FracTy& FracComb::cod() const { return node_->cod; }

inline const FracComb& FracComb::first() const {
  assert(node_->kids.size() == 2);
  return node_->kids[0];
}

inline const FracComb& FracComb::second() const {
  assert(node_->kids.size() == 2);
  return node_->kids[1];
}

inline bool FracComb::is_composite() const { return !node_->kids.empty(); }

inline const FracVal& FracComb::tag_value() const {
  assert(kind() == Kind::Eta || kind() == Kind::Eps);
  const FracTy& pair_ty = kind() == Kind::Eta ? cod() : dom();
  return pair_ty.right().witness();
}

inline const FracTy& FracComb::tag_type() const {
  assert(kind() == Kind::Eta || kind() == Kind::Eps);
  const FracTy& pair_ty = kind() == Kind::Eta ? cod() : dom();
  return pair_ty.left();
}

inline bool operator==(const FracComb& a, const FracComb& b) {
  if (a.kind() != b.kind() || a.dom() != b.dom() || a.cod() != b.cod()) return false;
  if (!a.is_composite()) return true;
  return a.first() == b.first() && a.second() == b.second();
}

inline bool operator!=(const FracComb& a, const FracComb& b) { return !(a == b); }

inline std::pair<FracTy, FracTy> infer(const FracComb& c) { return {c.dom(), c.cod()}; }

// Embeddings of the core tier. A core program embeds to a fractional program
// with the same behaviour (conservativity).
inline FracTy embed(const Ty& t) {
  switch (t.kind()) {
    case Ty::Kind::Zero: return FracTy::zero();
    case Ty::Kind::One: return FracTy::one();
    case Ty::Kind::Sum: return FracTy::sum(embed(t.left()), embed(t.right()));
    case Ty::Kind::Prod: return FracTy::prod(embed(t.left()), embed(t.right()));
  }
  return FracTy::zero();
}

inline FracVal embed(const Val& v) {
  switch (v.kind()) {
    case Val::Kind::Unit: return FracVal::unit();
    case Val::Kind::InL: return FracVal::inl(embed(v.child()));
    case Val::Kind::InR: return FracVal::inr(embed(v.child()));
    case Val::Kind::Pair: return FracVal::pair(embed(v.fst()), embed(v.snd()));
  }
  return FracVal::unit();
}

// Projects a fraction-free value back into the core tier.
inline Val project(const FracVal& v) {
  switch (v.kind()) {
    case FracVal::Kind::Unit: return Val::unit();
    case FracVal::Kind::InL: return Val::inl(project(v.child()));
    case FracVal::Kind::InR: return Val::inr(project(v.child()));
    case FracVal::Kind::Pair: return Val::pair(project(v.fst()), project(v.snd()));
    case FracVal::Kind::Gc:
      throw IllTyped("project: GC token has no core counterpart");
  }
  throw IllTyped("project: unknown value");
}

inline FracComb embed(const Comb& c) {
  switch (c.kind()) {
    case Comb::Kind::Id: return FracComb::id(embed(c.dom()));
    case Comb::Kind::UnitePlusL: return FracComb::unite_plus_l(embed(c.cod()));
    case Comb::Kind::UnitiPlusL: return FracComb::uniti_plus_l(embed(c.dom()));
    case Comb::Kind::SwapPlus:
      return FracComb::swap_plus(embed(c.dom().left()), embed(c.dom().right()));
    case Comb::Kind::AssoclPlus:
      return FracComb::assocl_plus(embed(c.dom().left()), embed(c.dom().right().left()),
                                   embed(c.dom().right().right()));
    case Comb::Kind::AssocrPlus:
      return FracComb::assocr_plus(embed(c.dom().left().left()),
                                   embed(c.dom().left().right()), embed(c.dom().right()));
    case Comb::Kind::UniteTimesL: return FracComb::unite_times_l(embed(c.cod()));
    case Comb::Kind::UnitiTimesL: return FracComb::uniti_times_l(embed(c.dom()));
    case Comb::Kind::SwapTimes:
      return FracComb::swap_times(embed(c.dom().left()), embed(c.dom().right()));
    case Comb::Kind::AssoclTimes:
      return FracComb::assocl_times(embed(c.dom().left()), embed(c.dom().right().left()),
                                    embed(c.dom().right().right()));
    case Comb::Kind::AssocrTimes:
      return FracComb::assocr_times(embed(c.dom().left().left()),
                                    embed(c.dom().left().right()), embed(c.dom().right()));
    case Comb::Kind::Absorbr: return FracComb::absorbr(embed(c.dom().right()));
    case Comb::Kind::Factorzl: return FracComb::factorzl(embed(c.cod().right()));
    case Comb::Kind::Dist:
      return FracComb::dist(embed(c.dom().left().left()), embed(c.dom().left().right()),
                            embed(c.dom().right()));
    case Comb::Kind::Factor:
      return FracComb::factor(embed(c.cod().left().left()), embed(c.cod().left().right()),
                              embed(c.cod().right()));
    case Comb::Kind::Seq: return FracComb::seq(embed(c.first()), embed(c.second()));
    case Comb::Kind::Plus: return FracComb::plus(embed(c.first()), embed(c.second()));
    case Comb::Kind::Times: return FracComb::times(embed(c.first()), embed(c.second()));
  }
  throw IllTyped("embed: unknown combinator");
}

// The partial evaluator. An absent result is the deallocation check failing
// at some eps; absence propagates through every composition form. Core
// combinators never produce absence.
inline std::optional<FracVal> eval(const FracComb& c, const FracVal& v) {
  const auto reject = [&]() -> IllTyped {
    return IllTyped("eval: value " + to_string(v) + " does not inhabit domain " +
                    to_string(c.dom()));
  };
  using VK = FracVal::Kind;
  switch (c.kind()) {
    case FracComb::Kind::Id:
      return v;
    case FracComb::Kind::UnitePlusL:
      if (v.kind() == VK::InR) return v.child();
      throw reject();
    case FracComb::Kind::UnitiPlusL:
      return FracVal::inr(v);
    case FracComb::Kind::SwapPlus:
      if (v.kind() == VK::InL) return FracVal::inr(v.child());
      if (v.kind() == VK::InR) return FracVal::inl(v.child());
      throw reject();
    case FracComb::Kind::AssoclPlus:
      if (v.kind() == VK::InL) return FracVal::inl(FracVal::inl(v.child()));
      if (v.kind() == VK::InR) {
        const FracVal& w = v.child();
        if (w.kind() == VK::InL) return FracVal::inl(FracVal::inr(w.child()));
        if (w.kind() == VK::InR) return FracVal::inr(w.child());
      }
      throw reject();
    case FracComb::Kind::AssocrPlus:
      if (v.kind() == VK::InL) {
        const FracVal& w = v.child();
        if (w.kind() == VK::InL) return FracVal::inl(w.child());
        if (w.kind() == VK::InR) return FracVal::inr(FracVal::inl(w.child()));
      }
      if (v.kind() == VK::InR) return FracVal::inr(FracVal::inr(v.child()));
      throw reject();
    case FracComb::Kind::UniteTimesL:
      if (v.kind() == VK::Pair && v.fst().kind() == VK::Unit) return v.snd();
      throw reject();
    case FracComb::Kind::UnitiTimesL:
      return FracVal::pair(FracVal::unit(), v);
    case FracComb::Kind::SwapTimes:
      if (v.kind() == VK::Pair) return FracVal::pair(v.snd(), v.fst());
      throw reject();
    case FracComb::Kind::AssoclTimes:
      if (v.kind() == VK::Pair && v.snd().kind() == VK::Pair)
        return FracVal::pair(FracVal::pair(v.fst(), v.snd().fst()), v.snd().snd());
      throw reject();
    case FracComb::Kind::AssocrTimes:
      if (v.kind() == VK::Pair && v.fst().kind() == VK::Pair)
        return FracVal::pair(v.fst().fst(), FracVal::pair(v.fst().snd(), v.snd()));
      throw reject();
    case FracComb::Kind::Absorbr:
    case FracComb::Kind::Factorzl:
      throw IllTyped("eval: no value inhabits " + to_string(c.dom()));
    case FracComb::Kind::Dist:
      if (v.kind() == VK::Pair) {
        const FracVal& l = v.fst();
        if (l.kind() == VK::InL) return FracVal::inl(FracVal::pair(l.child(), v.snd()));
        if (l.kind() == VK::InR) return FracVal::inr(FracVal::pair(l.child(), v.snd()));
      }
      throw reject();
    case FracComb::Kind::Factor:
      if (v.kind() == VK::InL && v.child().kind() == VK::Pair)
        return FracVal::pair(FracVal::inl(v.child().fst()), v.child().snd());
      if (v.kind() == VK::InR && v.child().kind() == VK::Pair)
        return FracVal::pair(FracVal::inr(v.child().fst()), v.child().snd());
      throw reject();
    case FracComb::Kind::Seq: {
      std::optional<FracVal> mid = eval(c.first(), v);
      if (!mid) return std::nullopt;
      return eval(c.second(), *mid);
    }
    case FracComb::Kind::Plus:
      if (v.kind() == VK::InL) {
        std::optional<FracVal> r = eval(c.first(), v.child());
        if (!r) return std::nullopt;
        return FracVal::inl(*r);
      }
      if (v.kind() == VK::InR) {
        std::optional<FracVal> r = eval(c.second(), v.child());
        if (!r) return std::nullopt;
        return FracVal::inr(*r);
      }
      throw reject();
    case FracComb::Kind::Times:
      if (v.kind() == VK::Pair) {
        std::optional<FracVal> a = eval(c.first(), v.fst());
        if (!a) return std::nullopt;
        std::optional<FracVal> b = eval(c.second(), v.snd());
        if (!b) return std::nullopt;
        return FracVal::pair(*a, *b);
      }
      throw reject();
    case FracComb::Kind::Eta:
      if (v.kind() == VK::Unit) return FracVal::pair(c.tag_value(), FracVal::gc());
      throw reject();
    case FracComb::Kind::Eps:
      // The deallocation check: the collector annihilates exactly the value
      // it was created for, anything else is the runtime exception.
      if (v.kind() == VK::Pair && v.snd().kind() == VK::Gc) {
        if (v.fst() == c.tag_value()) return FracVal::unit();
        return std::nullopt;
      }
      throw reject();
  }
  throw reject();
}

inline FracComb invert(const FracComb& c) {
  switch (c.kind()) {
    case FracComb::Kind::Id:
      return c;
    case FracComb::Kind::UnitePlusL:
      return FracComb::uniti_plus_l(c.cod());
    case FracComb::Kind::UnitiPlusL:
      return FracComb::unite_plus_l(c.dom());
    case FracComb::Kind::SwapPlus:
      return FracComb::swap_plus(c.dom().right(), c.dom().left());
    case FracComb::Kind::AssoclPlus:
      return FracComb::assocr_plus(c.dom().left(), c.dom().right().left(),
                                   c.dom().right().right());
    case FracComb::Kind::AssocrPlus:
      return FracComb::assocl_plus(c.dom().left().left(), c.dom().left().right(),
                                   c.dom().right());
    case FracComb::Kind::UniteTimesL:
      return FracComb::uniti_times_l(c.cod());
    case FracComb::Kind::UnitiTimesL:
      return FracComb::unite_times_l(c.dom());
    case FracComb::Kind::SwapTimes:
      return FracComb::swap_times(c.dom().right(), c.dom().left());
    case FracComb::Kind::AssoclTimes:
      return FracComb::assocr_times(c.dom().left(), c.dom().right().left(),
                                    c.dom().right().right());
    case FracComb::Kind::AssocrTimes:
      return FracComb::assocl_times(c.dom().left().left(), c.dom().left().right(),
                                    c.dom().right());
    case FracComb::Kind::Absorbr:
      return FracComb::factorzl(c.dom().right());
    case FracComb::Kind::Factorzl:
      return FracComb::absorbr(c.cod().right());
    case FracComb::Kind::Dist:
      return FracComb::factor(c.dom().left().left(), c.dom().left().right(),
                              c.dom().right());
    case FracComb::Kind::Factor:
      return FracComb::dist(c.cod().left().left(), c.cod().left().right(), c.cod().right());
    case FracComb::Kind::Seq:
      return FracComb::seq(invert(c.second()), invert(c.first()));
    case FracComb::Kind::Plus:
      return FracComb::plus(invert(c.first()), invert(c.second()));
    case FracComb::Kind::Times:
      return FracComb::times(invert(c.first()), invert(c.second()));
    case FracComb::Kind::Eta:
      return FracComb::eps(c.tag_value(), c.tag_type());
    case FracComb::Kind::Eps:
      return FracComb::eta(c.tag_value(), c.tag_type());
  }
  throw IllTyped("invert: unknown combinator");
}

// Folds a pipeline of steps into nested sequential composition.
inline FracComb seq_all(std::vector<FracComb> steps) {
  if (steps.empty()) throw IllTyped("seq_all: empty pipeline");
  FracComb acc = steps.front();
  for (std::size_t i = 1; i < steps.size(); ++i) acc = FracComb::seq(acc, steps[i]);
  return acc;
}

// (a*b)*(c*d) <-> (a*c)*(b*d), from associators and one inner swap.
inline FracComb interchange(const FracTy& a, const FracTy& b, const FracTy& c,
                            const FracTy& d) {
  return seq_all({
      FracComb::assocr_times(a, b, FracTy::prod(c, d)),
      FracComb::times(FracComb::id(a), FracComb::assocl_times(b, c, d)),
      FracComb::times(FracComb::id(a),
                      FracComb::times(FracComb::swap_times(b, c), FracComb::id(d))),
      FracComb::times(FracComb::id(a), FracComb::assocr_times(c, b, d)),
      FracComb::assocl_times(a, c, FracTy::prod(b, d)),
  });
}

// Identity on booleans implemented with an allocated ancilla: allocate a
// false bit and its collector, copy the input onto the ancilla wire with two
// CNOTs (leaving the input wire holding false), route the ancilla to the
// output and collect the input wire. Never raises the deallocation check.
inline FracComb id_via_ancilla() {
  const FracTy B = FracTy::boolean();
  const FracVal F = FracVal::boolean(false);
  const FracTy FB = FracTy::frac(B, F);
  const FracComb cnot = embed(cnot_gate());
  const FracTy BB = FracTy::prod(B, B);
  return seq_all({
      FracComb::uniti_times_l(B),                                        // (tt,x)
      FracComb::times(FracComb::eta(F, B), FracComb::id(B)),             // ((F,g),x)
      FracComb::times(FracComb::swap_times(B, FB), FracComb::id(B)),     // ((g,F),x)
      FracComb::assocr_times(FB, B, B),                                  // (g,(F,x))
      FracComb::times(FracComb::id(FB), FracComb::swap_times(B, B)),     // (g,(x,F))
      FracComb::times(FracComb::id(FB), cnot),                           // (g,(x,x))
      FracComb::times(FracComb::id(FB), FracComb::swap_times(B, B)),     // (g,(x,x))
      FracComb::times(FracComb::id(FB), cnot),                           // (g,(x,F))
      FracComb::swap_times(FB, BB),                                      // ((x,F),g)
      FracComb::assocr_times(B, B, FB),                                  // (x,(F,g))
      FracComb::times(FracComb::id(B), FracComb::eps(F, B)),             // (x,tt)
      FracComb::swap_times(B, FracTy::one()),                            // (tt,x)
      FracComb::unite_times_l(B),                                        // x
  });
}

// A collector for a pair of values splits into one collector per component:
// allocate each component with its own collector, regroup so the two fresh
// values sit next to the incoming pair collector, and annihilate them.
inline FracComb rev_times(const FracVal& v1, const FracTy& t1, const FracVal& v2,
                          const FracTy& t2) {
  const FracTy t12 = FracTy::prod(t1, t2);
  const FracVal v12 = FracVal::pair(v1, v2);
  const FracTy f12 = FracTy::frac(t12, v12);
  const FracTy f1 = FracTy::frac(t1, v1);
  const FracTy f2 = FracTy::frac(t2, v2);
  const FracTy tf1 = FracTy::prod(t1, f1);
  const FracTy tf2 = FracTy::prod(t2, f2);
  const FracTy ff = FracTy::prod(f1, f2);
  return seq_all({
      FracComb::uniti_times_l(f12),
      FracComb::times(FracComb::eta(v1, t1), FracComb::id(f12)),
      FracComb::uniti_times_l(FracTy::prod(tf1, f12)),
      FracComb::times(FracComb::eta(v2, t2), FracComb::id(FracTy::prod(tf1, f12))),
      FracComb::assocl_times(tf2, tf1, f12),
      FracComb::times(FracComb::swap_times(tf2, tf1), FracComb::id(f12)),
      FracComb::times(interchange(t1, f1, t2, f2), FracComb::id(f12)),
      FracComb::assocr_times(t12, ff, f12),
      FracComb::times(FracComb::id(t12), FracComb::swap_times(ff, f12)),
      FracComb::assocl_times(t12, f12, ff),
      FracComb::times(FracComb::eps(v12, t12), FracComb::id(ff)),
      FracComb::unite_times_l(ff),
  });
}

// Boolean program that succeeds exactly on false: the input is collected
// against a collector expecting false, and the freshly allocated false is
// emitted instead.
inline FracComb expect_false() {
  const FracTy B = FracTy::boolean();
  const FracVal F = FracVal::boolean(false);
  const FracTy FB = FracTy::frac(B, F);
  return seq_all({
      FracComb::uniti_times_l(B),                                     // (tt,x)
      FracComb::swap_times(FracTy::one(), B),                         // (x,tt)
      FracComb::times(FracComb::id(B), FracComb::eta(F, B)),          // (x,(F,g))
      FracComb::times(FracComb::id(B),
                      FracComb::swap_times(B, FB)),                   // (x,(g,F))
      FracComb::assocl_times(B, FB, B),                               // ((x,g),F)
      FracComb::times(FracComb::eps(F, B), FracComb::id(B)),          // (tt,F)
      FracComb::unite_times_l(B),                                     // F
  });
}

struct TruthRow {
  FracVal in;
  std::optional<FracVal> out;
};

inline std::vector<TruthRow> truth_table(const FracComb& c) {
  std::vector<TruthRow> rows;
  for (const FracVal& v : enumerate(c.dom())) rows.push_back({v, eval(c, v)});
  return rows;
}

// Exhaustive total-bijection check over the enumerated domain, plus the
// round trip through the syntactic inverse.
struct ProgramReport {
  std::size_t rows = 0;
  std::size_t absent = 0;
  bool bijective = false;
  bool round_trip = false;
  bool ok() const { return absent == 0 && bijective && round_trip; }
};

inline ProgramReport verify_program(const FracComb& c) {
  ProgramReport rep;
  const std::vector<FracVal> dom_vals = enumerate(c.dom());
  const std::vector<FracVal> cod_vals = enumerate(c.cod());
  const FracComb inv = invert(c);
  std::vector<FracVal> outs;
  rep.rows = dom_vals.size();
  rep.round_trip = true;
  for (const FracVal& v : dom_vals) {
    std::optional<FracVal> r = eval(c, v);
    if (!r) {
      ++rep.absent;
      continue;
    }
    outs.push_back(*r);
    std::optional<FracVal> back = eval(inv, *r);
    if (!back || *back != v) rep.round_trip = false;
  }
  // Permutation onto the codomain: every output occurs, none repeats.
  rep.bijective = outs.size() == cod_vals.size();
  if (rep.bijective) {
    std::vector<bool> used(cod_vals.size(), false);
    for (const FracVal& o : outs) {
      bool found = false;
      for (std::size_t i = 0; i < cod_vals.size(); ++i) {
        if (!used[i] && cod_vals[i] == o) {
          used[i] = true;
          found = true;
          break;
        }
      }
      if (!found) {
        rep.bijective = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace pifrac
