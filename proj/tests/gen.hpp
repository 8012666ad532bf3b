#pragma once
// Random well-typed program generators for the property suites. Programs are
// grown top-down from a domain type: at every step the generator collects
// the constructors whose domain matches the current type shape and picks
// one. Everything is seeded, so failures reproduce.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "pifrac/pifrac.hpp"

namespace pifrac::testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_);
  }
  bool chance(double p) { return std::uniform_real_distribution<>(0.0, 1.0)(eng_) < p; }

 private:
  std::mt19937_64 eng_;
};

// A base type of bounded size. With allow_empty, 0 may appear.
inline Ty random_ty(Rng& g, std::uint64_t max_size = 8, int depth = 3,
                    bool allow_empty = false) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::function<Ty(int)> go = [&](int d) -> Ty {
      if (d == 0 || g.chance(0.25)) {
        if (allow_empty && g.chance(0.12)) return Ty::zero();
        return g.chance(0.4) ? Ty::one() : Ty::boolean();
      }
      Ty a = go(d - 1);
      Ty b = go(d - 1);
      return g.chance(0.5) ? Ty::sum(a, b) : Ty::prod(a, b);
    };
    Ty t = go(depth);
    const std::uint64_t n = size_of(t);
    if (n <= max_size && (allow_empty || n > 0)) return t;
  }
  return Ty::boolean();
}

inline Val random_val(Rng& g, const Ty& t) {
  const std::vector<Val> all = enumerate(t);
  return all[g.below(all.size())];
}

// A combinator with the given domain.
inline Comb random_comb(Rng& g, const Ty& dom, int depth) {
  std::vector<std::function<Comb()>> cands;
  cands.push_back([&] { return Comb::id(dom); });
  if (depth > 0) {
    cands.push_back([&] { return Comb::uniti_plus_l(dom); });
    cands.push_back([&] { return Comb::uniti_times_l(dom); });
    // Sequencing dominates: it is how interesting programs arise.
    for (int i = 0; i < 4; ++i)
      cands.push_back([&] {
        Comb a = random_comb(g, dom, depth - 1);
        Comb b = random_comb(g, a.cod(), depth - 1);
        return Comb::seq(a, b);
      });
  }
  if (dom.kind() == Ty::Kind::Sum) {
    const Ty a = dom.left(), b = dom.right();
    cands.push_back([=] { return Comb::swap_plus(a, b); });
    if (depth > 0)
      cands.push_back([&g, a, b, depth] {
        return Comb::plus(random_comb(g, a, depth - 1), random_comb(g, b, depth - 1));
      });
    if (a.kind() == Ty::Kind::Zero) cands.push_back([=] { return Comb::unite_plus_l(b); });
    if (b.kind() == Ty::Kind::Sum)
      cands.push_back([=] { return Comb::assocl_plus(a, b.left(), b.right()); });
    if (a.kind() == Ty::Kind::Sum)
      cands.push_back([=] { return Comb::assocr_plus(a.left(), a.right(), b); });
    if (a.kind() == Ty::Kind::Prod && b.kind() == Ty::Kind::Prod &&
        a.right() == b.right())
      cands.push_back([=] { return Comb::factor(a.left(), b.left(), a.right()); });
  }
  if (dom.kind() == Ty::Kind::Prod) {
    const Ty a = dom.left(), b = dom.right();
    cands.push_back([=] { return Comb::swap_times(a, b); });
    if (depth > 0)
      cands.push_back([&g, a, b, depth] {
        return Comb::times(random_comb(g, a, depth - 1), random_comb(g, b, depth - 1));
      });
    if (a.kind() == Ty::Kind::One) cands.push_back([=] { return Comb::unite_times_l(b); });
    if (a.kind() == Ty::Kind::Zero) cands.push_back([=] { return Comb::absorbr(b); });
    if (b.kind() == Ty::Kind::Prod)
      cands.push_back([=] { return Comb::assocl_times(a, b.left(), b.right()); });
    if (a.kind() == Ty::Kind::Prod)
      cands.push_back([=] { return Comb::assocr_times(a.left(), a.right(), b); });
    if (a.kind() == Ty::Kind::Sum)
      cands.push_back([=] { return Comb::dist(a.left(), a.right(), b); });
  }
  if (dom.kind() == Ty::Kind::Zero && depth > 0)
    cands.push_back([&] { return Comb::factorzl(random_ty(g, 4, 2, true)); });
  return cands[g.below(cands.size())]();
}

inline Comb random_comb(Rng& g, int depth = 6) {
  // keep some empty-type programs around: the zero-absorbing primitives
  // only ever arise there
  return random_comb(g, random_ty(g, 8, 3, g.chance(0.25)), depth);
}

// A fractional-tier program with the given domain; can allocate and collect.
inline FracComb random_frac_comb(Rng& g, const FracTy& dom, int depth) {
  std::vector<std::function<FracComb()>> cands;
  cands.push_back([&] { return FracComb::id(dom); });
  if (depth > 0) {
    cands.push_back([&] { return FracComb::uniti_times_l(dom); });
    for (int i = 0; i < 4; ++i)
      cands.push_back([&] {
        FracComb a = random_frac_comb(g, dom, depth - 1);
        FracComb b = random_frac_comb(g, a.cod(), depth - 1);
        return FracComb::seq(a, b);
      });
  }
  if (dom.kind() == FracTy::Kind::One && depth > 0) {
    // allocate, then let the walk decide what happens to the pair
    cands.push_back([&] {
      const Ty t = random_ty(g, 4, 2);
      const Val v = random_val(g, t);
      return FracComb::eta(embed(v), embed(t));
    });
    cands.push_back([&] {
      // balanced allocate/collect round trip
      const Ty t = random_ty(g, 4, 2);
      const Val v = random_val(g, t);
      return FracComb::seq(FracComb::eta(embed(v), embed(t)),
                           FracComb::eps(embed(v), embed(t)));
    });
  }
  if (dom.kind() == FracTy::Kind::Sum) {
    const FracTy a = dom.left(), b = dom.right();
    cands.push_back([=] { return FracComb::swap_plus(a, b); });
    if (depth > 0)
      cands.push_back([&g, a, b, depth] {
        return FracComb::plus(random_frac_comb(g, a, depth - 1),
                              random_frac_comb(g, b, depth - 1));
      });
    if (b.kind() == FracTy::Kind::Sum)
      cands.push_back([=] { return FracComb::assocl_plus(a, b.left(), b.right()); });
    if (a.kind() == FracTy::Kind::Sum)
      cands.push_back([=] { return FracComb::assocr_plus(a.left(), a.right(), b); });
  }
  if (dom.kind() == FracTy::Kind::Prod) {
    const FracTy a = dom.left(), b = dom.right();
    cands.push_back([=] { return FracComb::swap_times(a, b); });
    if (depth > 0)
      cands.push_back([&g, a, b, depth] {
        return FracComb::times(random_frac_comb(g, a, depth - 1),
                               random_frac_comb(g, b, depth - 1));
      });
    if (a.kind() == FracTy::Kind::One)
      cands.push_back([=] { return FracComb::unite_times_l(b); });
    if (b.kind() == FracTy::Kind::Prod)
      cands.push_back([=] { return FracComb::assocl_times(a, b.left(), b.right()); });
    if (a.kind() == FracTy::Kind::Prod)
      cands.push_back([=] { return FracComb::assocr_times(a.left(), a.right(), b); });
    if (a.kind() == FracTy::Kind::Sum)
      cands.push_back([=] { return FracComb::dist(a.left(), a.right(), b); });
    // a matching collector right next to its type: collect
    if (b.kind() == FracTy::Kind::Frac && b.base() == a) {
      cands.push_back([=] { return FracComb::eps(b.witness(), a); });
      cands.push_back([=] { return FracComb::eps(b.witness(), a); });
    }
  }
  return cands[g.below(cands.size())]();
}

inline FracComb random_frac_comb(Rng& g, int depth = 6) {
  FracTy dom =
      g.chance(0.5) ? embed(random_ty(g, 8, 3, g.chance(0.25))) : FracTy::one();
  return random_frac_comb(g, dom, depth);
}

inline PtTy random_pt_ty(Rng& g, int depth) {
  if (depth == 0 || g.chance(0.5)) {
    const Ty t = random_ty(g, 8, 2);
    return PtTy::pt(t, random_val(g, t));
  }
  switch (g.below(4)) {
    case 0: return PtTy::prod(random_pt_ty(g, depth - 1), random_pt_ty(g, depth - 1));
    case 1: return PtTy::sing(random_pt_ty(g, depth - 1));
    case 2: return PtTy::recip(random_pt_ty(g, depth - 1));
    default: {
      const Ty t = random_ty(g, 8, 2);
      return PtTy::pt(t, random_val(g, t));
    }
  }
}

// A pointed program with the given domain. Focus-critical constructors
// (eta, eps, the merge/split pair, the singleton structure) are all
// reachable; eps is weighted up whenever the shape allows it.
inline PtComb random_pt_comb(Rng& g, const PtTy& dom, int depth) {
  std::vector<std::function<PtComb()>> cands;
  cands.push_back([&] { return PtComb::id(dom); });
  cands.push_back([&] { return PtComb::ret(dom); });
  if (depth > 0) {
    cands.push_back([&] { return PtComb::uniti_times_l(dom); });
    for (int i = 0; i < 4; ++i)
      cands.push_back([&] {
        PtComb a = random_pt_comb(g, dom, depth - 1);
        PtComb b = random_pt_comb(g, a.cod(), depth - 1);
        return PtComb::seq(a, b);
      });
  }
  if (dom == PtTy::unit() && depth > 0)
    cands.push_back([&] { return PtComb::eta(random_pt_ty(g, 2)); });
  if (dom.kind() == PtTy::Kind::Prod) {
    const PtTy a = dom.left(), b = dom.right();
    cands.push_back([=] { return PtComb::swap_times(a, b); });
    if (depth > 0)
      cands.push_back([&g, a, b, depth] {
        return PtComb::times(random_pt_comb(g, a, depth - 1),
                             random_pt_comb(g, b, depth - 1));
      });
    if (a == PtTy::unit()) cands.push_back([=] { return PtComb::unite_times_l(b); });
    if (b.kind() == PtTy::Kind::Prod)
      cands.push_back([=] { return PtComb::assocl_times(a, b.left(), b.right()); });
    if (a.kind() == PtTy::Kind::Prod)
      cands.push_back([=] { return PtComb::assocr_times(a.left(), a.right(), b); });
    if (a.kind() == PtTy::Kind::Sing && b.kind() == PtTy::Kind::Recip &&
        a.inner() == b.inner())
      for (int i = 0; i < 3; ++i)
        cands.push_back([=] { return PtComb::eps(a.inner()); });
    if (a.kind() == PtTy::Kind::Sing && b.kind() == PtTy::Kind::Sing)
      cands.push_back([=] { return PtComb::tensor_sing(a.inner(), b.inner()); });
    if (a.kind() == PtTy::Kind::Pt && b.kind() == PtTy::Kind::Pt)
      cands.push_back(
          [=] { return PtComb::merge_prod(a.base(), a.focus(), b.base(), b.focus()); });
  }
  if (dom.kind() == PtTy::Kind::Sing) {
    const PtTy t = dom.inner();
    cands.push_back([=] { return PtComb::extract(t); });
    cands.push_back([=] { return PtComb::duplicate_sing(t); });
    if (depth > 0)
      cands.push_back(
          [&g, t, depth] { return PtComb::sing_map(random_pt_comb(g, t, depth - 1)); });
    if (t.kind() == PtTy::Kind::Sing)
      cands.push_back([=] { return PtComb::join_sing(t.inner()); });
    if (t.kind() == PtTy::Kind::Prod)
      cands.push_back([=] { return PtComb::cotensor_sing(t.left(), t.right()); });
  }
  if (dom.kind() == PtTy::Kind::Pt) {
    const Ty t = dom.base();
    const Val v = dom.focus();
    if (depth > 0)
      cands.push_back(
          [&g, t, v, depth] { return PtComb::lift(random_comb(g, t, depth - 1), v); });
    if (t.kind() == Ty::Kind::Prod)
      cands.push_back(
          [=] { return PtComb::split_prod(t.left(), v.fst(), t.right(), v.snd()); });
  }
  if (dom.kind() == PtTy::Kind::Recip && dom.inner().kind() == PtTy::Kind::Recip)
    cands.push_back([&] { return rev_rev(dom.inner().inner()); });
  return cands[g.below(cands.size())]();
}

inline PtComb random_pt_comb(Rng& g, int depth = 6) {
  // Mix free walks with the allocate/collect and ancilla shapes so the
  // eta/eps machinery sees heavy traffic.
  if (g.chance(0.15)) {
    const PtTy t = random_pt_ty(g, 2);
    return PtComb::seq(PtComb::eta(t), PtComb::eps(t));
  }
  if (g.chance(0.1)) return rev_rev(random_pt_ty(g, 2));
  PtTy dom = g.chance(0.25) ? PtTy::unit() : random_pt_ty(g, 2);
  return random_pt_comb(g, dom, depth);
}

}  // namespace pifrac::testgen
