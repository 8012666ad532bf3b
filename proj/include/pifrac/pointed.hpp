#pragma once
// The pointed tier: every type carries a value in focus, and each combinator
// computes its pointed domain and codomain at construction time. Composing
// two combinators whose foci disagree fails right there, which is what makes
// deallocation safety a construction-time property instead of a runtime
// check.
//
// Singleton types track one particular value through a program; reciprocal
// types are collectors for that value. eta/eps work at singleton precision:
// eps only composes when the very focus it expects is the one in flight.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pifrac/comb.hpp"
#include "pifrac/core.hpp"
#include "pifrac/frac.hpp"

namespace pifrac {

// A pointed type: a plain type with a chosen focus, products of pointed
// types, singletons, and reciprocals. The carrier of a reciprocal is the GC
// token (the collector holds no runtime information of its own).
class PtTy {
 public:
  enum class Kind : std::uint8_t { Pt, Prod, Sing, Recip };

  static PtTy pt(Ty base, Val focus);  // focus must inhabit base
  static PtTy prod(PtTy left, PtTy right);
  static PtTy sing(PtTy inner);
  static PtTy recip(PtTy inner);
  static PtTy unit();  // 1 focused at tt

  Kind kind() const;
  const Ty& base() const;    // Pt only
  const Val& focus() const;  // Pt only
  const PtTy& left() const;
  const PtTy& right() const;
  const PtTy& inner() const;  // Sing/Recip only

 private:
  struct Node;
  explicit PtTy(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct PtTy::Node {
  Kind kind;
  std::vector<PtTy> kids;
  std::vector<Ty> tys;
  std::vector<Val> vals;
};

inline PtTy PtTy::pt(Ty base, Val focus) {
  if (!has_type(focus, base))
    throw IllTyped("pointed type: focus " + to_string(focus) + " does not inhabit " +
                   to_string(base));
  return PtTy{std::make_shared<const Node>(
      Node{Kind::Pt, {}, {std::move(base)}, {std::move(focus)}})};
}

inline PtTy PtTy::prod(PtTy left, PtTy right) {
  return PtTy{std::make_shared<const Node>(
      Node{Kind::Prod, {std::move(left), std::move(right)}, {}, {}})};
}

inline PtTy PtTy::sing(PtTy inner) {
  return PtTy{std::make_shared<const Node>(Node{Kind::Sing, {std::move(inner)}, {}, {}})};
}

inline PtTy PtTy::recip(PtTy inner) {
  return PtTy{std::make_shared<const Node>(Node{Kind::Recip, {std::move(inner)}, {}, {}})};
}

inline PtTy PtTy::unit() {
  static const PtTy u = pt(Ty::one(), Val::unit());
  return u;
}

inline PtTy::Kind PtTy::kind() const { return node_->kind; }

inline const Ty& PtTy::base() const {
  assert(kind() == Kind::Pt);
  return node_->tys[0];
}

inline const Val& PtTy::focus() const {
  assert(kind() == Kind::Pt);
  return node_->vals[0];
}

inline const PtTy& PtTy::left() const {
  assert(kind() == Kind::Prod);
  return node_->kids[0];
}

inline const PtTy& PtTy::right() const {
  assert(kind() == Kind::Prod);
  return node_->kids[1];
}

inline const PtTy& PtTy::inner() const {
  assert(kind() == Kind::Sing || kind() == Kind::Recip);
  return node_->kids[0];
}

inline bool operator==(const PtTy& a, const PtTy& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PtTy::Kind::Pt:
      return a.base() == b.base() && a.focus() == b.focus();
    case PtTy::Kind::Prod:
      return a.left() == b.left() && a.right() == b.right();
    case PtTy::Kind::Sing:
    case PtTy::Kind::Recip:
      return a.inner() == b.inner();
  }
  return false;
}

inline bool operator!=(const PtTy& a, const PtTy& b) { return !(a == b); }

inline std::string to_string(const PtTy& t) {
  switch (t.kind()) {
    case PtTy::Kind::Pt:
      return "(" + to_string(t.base()) + " # " + to_string(t.focus()) + ")";
    case PtTy::Kind::Prod:
      return "(p* " + to_string(t.left()) + " " + to_string(t.right()) + ")";
    case PtTy::Kind::Sing:
      return "(sing " + to_string(t.inner()) + ")";
    case PtTy::Kind::Recip:
      return "(recip " + to_string(t.inner()) + ")";
  }
  return "?";
}

// The value in focus, as a runtime carrier. A singleton's carrier is its
// inner focus; a reciprocal's carrier is the GC token.
inline FracVal carrier(const PtTy& t) {
  switch (t.kind()) {
    case PtTy::Kind::Pt:
      return embed(t.focus());
    case PtTy::Kind::Prod:
      return FracVal::pair(carrier(t.left()), carrier(t.right()));
    case PtTy::Kind::Sing:
      return carrier(t.inner());
    case PtTy::Kind::Recip:
      return FracVal::gc();
  }
  return FracVal::unit();
}

// Equality of the shapes with every focus erased. Distinguishes a genuine
// type error from a focus disagreement.
inline bool same_shape(const PtTy& a, const PtTy& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PtTy::Kind::Pt:
      return a.base() == b.base();
    case PtTy::Kind::Prod:
      return same_shape(a.left(), b.left()) && same_shape(a.right(), b.right());
    case PtTy::Kind::Sing:
    case PtTy::Kind::Recip:
      return same_shape(a.inner(), b.inner());
  }
  return false;
}

class PtComb {
 public:
  enum class Kind : std::uint8_t {
    Lift,     // a core combinator applied at one specific input value
    Seq,
    Times,
    Id,
    SwapTimes,
    AssoclTimes,
    AssocrTimes,
    UniteTimesL,
    UnitiTimesL,
    Eta,       // .1 <-> sing T * recip T
    Eps,       // sing T * recip T <-> .1
    Return,    // T <-> sing T
    Extract,   // sing T <-> T
    SingMap,   // functor action on singletons
    TensorSing,    // sing A * sing B <-> sing (A * B)
    CotensorSing,  // sing (A * B) <-> sing A * sing B
    JoinSing,      // sing (sing T) <-> sing T
    DuplicateSing, // sing T <-> sing (sing T)
    SplitProd,     // (t1*t2 # (v1,v2)) <-> (t1 # v1) * (t2 # v2)
    MergeProd,     // (t1 # v1) * (t2 # v2) <-> (t1*t2 # (v1,v2))
  };

  static PtComb lift(Comb c, Val at);
  static PtComb seq(PtComb a, PtComb b);
  static PtComb times(PtComb a, PtComb b);
  static PtComb id(PtTy t);
  static PtComb swap_times(PtTy a, PtTy b);
  static PtComb assocl_times(PtTy a, PtTy b, PtTy c);
  static PtComb assocr_times(PtTy a, PtTy b, PtTy c);
  static PtComb unite_times_l(PtTy t);
  static PtComb uniti_times_l(PtTy t);
  static PtComb eta(PtTy t);
  static PtComb eps(PtTy t);
  static PtComb ret(PtTy t);
  static PtComb extract(PtTy t);
  static PtComb sing_map(PtComb f);
  static PtComb tensor_sing(PtTy a, PtTy b);
  static PtComb cotensor_sing(PtTy a, PtTy b);
  static PtComb join_sing(PtTy t);
  static PtComb duplicate_sing(PtTy t);
  static PtComb split_prod(Ty t1, Val v1, Ty t2, Val v2);
  static PtComb merge_prod(Ty t1, Val v1, Ty t2, Val v2);

  Kind kind() const;
  const PtTy& dom() const;
  const PtTy& cod() const;
  const PtComb& first() const;
  const PtComb& second() const;
  std::size_t arity() const;
  const Comb& lifted() const;   // Lift only
  const Val& lift_at() const;   // Lift only

 private:
  struct Node;
  explicit PtComb(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static PtComb make(Kind k, PtTy dom, PtTy cod, std::vector<PtComb> kids = {});
  std::shared_ptr<const Node> node_;
};

struct PtComb::Node {
  Kind kind;
  PtTy dom;
  PtTy cod;
  std::vector<PtComb> kids;
  std::vector<Comb> combs;
  std::vector<Val> vals;
};

inline PtComb PtComb::make(Kind k, PtTy dom, PtTy cod, std::vector<PtComb> kids) {
  return PtComb{std::make_shared<const Node>(
      Node{k, std::move(dom), std::move(cod), std::move(kids), {}, {}})};
}

inline PtComb PtComb::lift(Comb c, Val at) {
  if (!has_type(at, c.dom()))
    throw IllTyped("lift: value " + to_string(at) + " does not inhabit " +
                   to_string(c.dom()));
  Val out = eval(c, at);  // evaluation reflected into the type
  PtTy dom = PtTy::pt(c.dom(), at);
  PtTy cod = PtTy::pt(c.cod(), std::move(out));
  return PtComb{std::make_shared<const Node>(Node{
      Kind::Lift, std::move(dom), std::move(cod), {}, {std::move(c)}, {std::move(at)}})};
}

inline PtComb PtComb::seq(PtComb a, PtComb b) {
  if (a.cod() != b.dom()) {
    if (same_shape(a.cod(), b.dom()))
      throw PointMismatch("sequential composition", to_string(carrier(b.dom())),
                          to_string(carrier(a.cod())));
    throw TypeMismatch("sequential composition", to_string(b.dom()), to_string(a.cod()));
  }
  PtTy dom = a.dom();
  PtTy cod = b.cod();
  return make(Kind::Seq, std::move(dom), std::move(cod), {std::move(a), std::move(b)});
}

inline PtComb PtComb::times(PtComb a, PtComb b) {
  PtTy dom = PtTy::prod(a.dom(), b.dom());
  PtTy cod = PtTy::prod(a.cod(), b.cod());
  return make(Kind::Times, std::move(dom), std::move(cod), {std::move(a), std::move(b)});
}

inline PtComb PtComb::id(PtTy t) { return make(Kind::Id, t, t); }

inline PtComb PtComb::swap_times(PtTy a, PtTy b) {
  return make(Kind::SwapTimes, PtTy::prod(a, b), PtTy::prod(b, a));
}

inline PtComb PtComb::assocl_times(PtTy a, PtTy b, PtTy c) {
  return make(Kind::AssoclTimes, PtTy::prod(a, PtTy::prod(b, c)),
              PtTy::prod(PtTy::prod(a, b), c));
}

inline PtComb PtComb::assocr_times(PtTy a, PtTy b, PtTy c) {
  return make(Kind::AssocrTimes, PtTy::prod(PtTy::prod(a, b), c),
              PtTy::prod(a, PtTy::prod(b, c)));
}

inline PtComb PtComb::unite_times_l(PtTy t) {
  return make(Kind::UniteTimesL, PtTy::prod(PtTy::unit(), t), t);
}

inline PtComb PtComb::uniti_times_l(PtTy t) {
  return make(Kind::UnitiTimesL, t, PtTy::prod(PtTy::unit(), t));
}

inline PtComb PtComb::eta(PtTy t) {
  PtTy cod = PtTy::prod(PtTy::sing(t), PtTy::recip(t));
  return make(Kind::Eta, PtTy::unit(), std::move(cod));
}

inline PtComb PtComb::eps(PtTy t) {
  PtTy dom = PtTy::prod(PtTy::sing(t), PtTy::recip(t));
  return make(Kind::Eps, std::move(dom), PtTy::unit());
}

inline PtComb PtComb::ret(PtTy t) { return make(Kind::Return, t, PtTy::sing(t)); }

inline PtComb PtComb::extract(PtTy t) { return make(Kind::Extract, PtTy::sing(t), t); }

inline PtComb PtComb::sing_map(PtComb f) {
  PtTy dom = PtTy::sing(f.dom());
  PtTy cod = PtTy::sing(f.cod());
  return make(Kind::SingMap, std::move(dom), std::move(cod), {std::move(f)});
}

inline PtComb PtComb::tensor_sing(PtTy a, PtTy b) {
  return make(Kind::TensorSing, PtTy::prod(PtTy::sing(a), PtTy::sing(b)),
              PtTy::sing(PtTy::prod(a, b)));
}

inline PtComb PtComb::cotensor_sing(PtTy a, PtTy b) {
  return make(Kind::CotensorSing, PtTy::sing(PtTy::prod(a, b)),
              PtTy::prod(PtTy::sing(a), PtTy::sing(b)));
}

inline PtComb PtComb::join_sing(PtTy t) {
  return make(Kind::JoinSing, PtTy::sing(PtTy::sing(t)), PtTy::sing(t));
}

inline PtComb PtComb::duplicate_sing(PtTy t) {
  return make(Kind::DuplicateSing, PtTy::sing(t), PtTy::sing(PtTy::sing(t)));
}

inline PtComb PtComb::split_prod(Ty t1, Val v1, Ty t2, Val v2) {
  PtTy dom = PtTy::pt(Ty::prod(t1, t2), Val::pair(v1, v2));
  PtTy cod = PtTy::prod(PtTy::pt(std::move(t1), std::move(v1)),
                        PtTy::pt(std::move(t2), std::move(v2)));
  return make(Kind::SplitProd, std::move(dom), std::move(cod));
}

inline PtComb PtComb::merge_prod(Ty t1, Val v1, Ty t2, Val v2) {
  PtTy dom = PtTy::prod(PtTy::pt(t1, v1), PtTy::pt(t2, v2));
  PtTy cod = PtTy::pt(Ty::prod(std::move(t1), std::move(t2)),
                      Val::pair(std::move(v1), std::move(v2)));
  return make(Kind::MergeProd, std::move(dom), std::move(cod));
}

inline PtComb::Kind PtComb::kind() const { return node_->kind; }
inline const PtTy& PtComb::dom() const { return node_->dom; }
inline const PtTy& PtComb::cod() const { return node_->cod; }

inline const PtComb& PtComb::first() const {
  assert(!node_->kids.empty());
  return node_->kids[0];
}

inline const PtComb& PtComb::second() const {
  assert(node_->kids.size() == 2);
  return node_->kids[1];
}

inline std::size_t PtComb::arity() const { return node_->kids.size(); }

inline const Comb& PtComb::lifted() const {
  assert(kind() == Kind::Lift);
  return node_->combs[0];
}

inline const Val& PtComb::lift_at() const {
  assert(kind() == Kind::Lift);
  return node_->vals[0];
}

inline std::pair<PtTy, PtTy> pt_dom_cod(const PtComb& c) { return {c.dom(), c.cod()}; }

namespace detail {

// Structural evaluation on carriers. Deliberately independent of the
// construction-time bookkeeping: the suites check that this interpreter
// lands on exactly the focus that the types predicted.
inline FracVal pt_run(const PtComb& c, const FracVal& v) {
  const auto reject = [&]() -> IllTyped {
    return IllTyped("pointed eval: value " + to_string(v) + " does not fit " +
                    to_string(c.dom()));
  };
  using VK = FracVal::Kind;
  switch (c.kind()) {
    case PtComb::Kind::Lift:
      return embed(eval(c.lifted(), project(v)));
    case PtComb::Kind::Seq:
      return pt_run(c.second(), pt_run(c.first(), v));
    case PtComb::Kind::Times:
      if (v.kind() == VK::Pair)
        return FracVal::pair(pt_run(c.first(), v.fst()), pt_run(c.second(), v.snd()));
      throw reject();
    case PtComb::Kind::Id:
      return v;
    case PtComb::Kind::SwapTimes:
      if (v.kind() == VK::Pair) return FracVal::pair(v.snd(), v.fst());
      throw reject();
    case PtComb::Kind::AssoclTimes:
      if (v.kind() == VK::Pair && v.snd().kind() == VK::Pair)
        return FracVal::pair(FracVal::pair(v.fst(), v.snd().fst()), v.snd().snd());
      throw reject();
    case PtComb::Kind::AssocrTimes:
      if (v.kind() == VK::Pair && v.fst().kind() == VK::Pair)
        return FracVal::pair(v.fst().fst(), FracVal::pair(v.fst().snd(), v.snd()));
      throw reject();
    case PtComb::Kind::UniteTimesL:
      if (v.kind() == VK::Pair && v.fst().kind() == VK::Unit) return v.snd();
      throw reject();
    case PtComb::Kind::UnitiTimesL:
      return FracVal::pair(FracVal::unit(), v);
    case PtComb::Kind::Eta:
      // The witness in focus materializes next to its collector.
      if (v.kind() == VK::Unit)
        return FracVal::pair(carrier(c.cod().left()), FracVal::gc());
      throw reject();
    case PtComb::Kind::Eps:
      if (v.kind() == VK::Pair && v.snd().kind() == VK::Gc) {
        if (v.fst() == carrier(c.dom().left())) return FracVal::unit();
        // Unreachable for constructible programs; kept as a hard failure so
        // an interpreter bug cannot masquerade as success.
        throw IllTyped("pointed eval: eps met " + to_string(v.fst()) + ", expected " +
                       to_string(carrier(c.dom().left())));
      }
      throw reject();
    case PtComb::Kind::Return:
    case PtComb::Kind::Extract:
    case PtComb::Kind::TensorSing:
    case PtComb::Kind::CotensorSing:
    case PtComb::Kind::JoinSing:
    case PtComb::Kind::DuplicateSing:
    case PtComb::Kind::SplitProd:
    case PtComb::Kind::MergeProd:
      // Singleton wrappers and product regrouping leave the carrier alone.
      return v;
    case PtComb::Kind::SingMap:
      return pt_run(c.first(), v);
  }
  throw reject();
}

}  // namespace detail

// Evaluation under the singleton discipline: the only admissible input is
// the focus of the domain, and the result lands on the focus of the
// codomain.
inline FracVal pt_eval(const PtComb& c, const FracVal& v) {
  if (v != carrier(c.dom()))
    throw IllTyped("pointed eval: input " + to_string(v) + " is not the focus " +
                   to_string(carrier(c.dom())));
  return detail::pt_run(c, v);
}

inline PtComb pt_invert(const PtComb& c) {
  switch (c.kind()) {
    case PtComb::Kind::Lift:
      return PtComb::lift(invert(c.lifted()), eval(c.lifted(), c.lift_at()));
    case PtComb::Kind::Seq:
      return PtComb::seq(pt_invert(c.second()), pt_invert(c.first()));
    case PtComb::Kind::Times:
      return PtComb::times(pt_invert(c.first()), pt_invert(c.second()));
    case PtComb::Kind::Id:
      return c;
    case PtComb::Kind::SwapTimes:
      return PtComb::swap_times(c.dom().right(), c.dom().left());
    case PtComb::Kind::AssoclTimes:
      return PtComb::assocr_times(c.dom().left(), c.dom().right().left(),
                                  c.dom().right().right());
    case PtComb::Kind::AssocrTimes:
      return PtComb::assocl_times(c.dom().left().left(), c.dom().left().right(),
                                  c.dom().right());
    case PtComb::Kind::UniteTimesL:
      return PtComb::uniti_times_l(c.cod());
    case PtComb::Kind::UnitiTimesL:
      return PtComb::unite_times_l(c.dom());
    case PtComb::Kind::Eta:
      return PtComb::eps(c.cod().left().inner());
    case PtComb::Kind::Eps:
      return PtComb::eta(c.dom().left().inner());
    case PtComb::Kind::Return:
      return PtComb::extract(c.dom());
    case PtComb::Kind::Extract:
      return PtComb::ret(c.cod());
    case PtComb::Kind::SingMap:
      return PtComb::sing_map(pt_invert(c.first()));
    case PtComb::Kind::TensorSing:
      return PtComb::cotensor_sing(c.cod().inner().left(), c.cod().inner().right());
    case PtComb::Kind::CotensorSing:
      return PtComb::tensor_sing(c.dom().inner().left(), c.dom().inner().right());
    case PtComb::Kind::JoinSing:
      return PtComb::duplicate_sing(c.cod().inner());
    case PtComb::Kind::DuplicateSing:
      return PtComb::join_sing(c.dom().inner());
    case PtComb::Kind::SplitProd:
      return PtComb::merge_prod(c.cod().left().base(), c.cod().left().focus(),
                                c.cod().right().base(), c.cod().right().focus());
    case PtComb::Kind::MergeProd:
      return PtComb::split_prod(c.dom().left().base(), c.dom().left().focus(),
                                c.dom().right().base(), c.dom().right().focus());
  }
  throw IllTyped("pointed invert: unknown combinator");
}

inline PtComb pt_seq_all(std::vector<PtComb> steps) {
  if (steps.empty()) throw IllTyped("pt_seq_all: empty pipeline");
  PtComb acc = steps.front();
  for (std::size_t i = 1; i < steps.size(); ++i) acc = PtComb::seq(acc, steps[i]);
  return acc;
}

// A collector for a collector "rematerializes" the collected value: from
// recip (recip T) we allocate a fresh singleton of T together with its
// collector, wrap the fresh collector into a singleton, and feed it to the
// incoming second-order collector. What remains is the singleton of T.
inline PtComb rev_rev(const PtTy& t) {
  const PtTy s = PtTy::sing(t);
  const PtTy r = PtTy::recip(t);
  const PtTy rr = PtTy::recip(r);
  return pt_seq_all({
      PtComb::uniti_times_l(rr),                                    // (tt, gg)
      PtComb::times(PtComb::eta(t), PtComb::id(rr)),                // ((s,g), gg)
      PtComb::assocr_times(s, r, rr),                               // (s, (g,gg))
      PtComb::times(PtComb::id(s),
                    PtComb::times(PtComb::ret(r), PtComb::id(rr))), // (s, (<g>,gg))
      PtComb::times(PtComb::id(s), PtComb::eps(r)),                 // (s, tt)
      PtComb::swap_times(s, PtTy::unit()),                          // (tt, s)
      PtComb::unite_times_l(s),                                     // s
  });
}

}  // namespace pifrac
