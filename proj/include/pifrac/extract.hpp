#pragma once
// Extraction from the pointed tier to the fractional tier. Types map to a
// fractional type together with the value the foci pin down; singleton
// wrappers erase; a reciprocal becomes the fraction over its extracted inner
// type and value, inhabited by the GC token.
//
// check_ext is the executable no-exception property: running the extracted
// program on the extracted input must produce exactly the extracted output,
// never an absent result. The construction-time focus checks of the pointed
// tier are what make this hold for every constructible program.

#include <optional>

#include "pifrac/frac.hpp"
#include "pifrac/pointed.hpp"

namespace pifrac {

struct ExtResult {
  FracTy ty;
  FracVal val;
};

inline ExtResult ext_ty(const PtTy& t) {
  switch (t.kind()) {
    case PtTy::Kind::Pt:
      return {embed(t.base()), embed(t.focus())};
    case PtTy::Kind::Prod: {
      ExtResult a = ext_ty(t.left());
      ExtResult b = ext_ty(t.right());
      return {FracTy::prod(a.ty, b.ty), FracVal::pair(a.val, b.val)};
    }
    case PtTy::Kind::Sing:
      return ext_ty(t.inner());
    case PtTy::Kind::Recip: {
      ExtResult e = ext_ty(t.inner());
      return {FracTy::frac(e.ty, e.val), FracVal::gc()};
    }
  }
  throw IllTyped("ext_ty: unknown pointed type");
}

inline FracComb ext_comb(const PtComb& c) {
  switch (c.kind()) {
    case PtComb::Kind::Lift:
      return embed(c.lifted());
    case PtComb::Kind::Seq:
      return FracComb::seq(ext_comb(c.first()), ext_comb(c.second()));
    case PtComb::Kind::Times:
      return FracComb::times(ext_comb(c.first()), ext_comb(c.second()));
    case PtComb::Kind::Id:
      return FracComb::id(ext_ty(c.dom()).ty);
    case PtComb::Kind::SwapTimes:
      return FracComb::swap_times(ext_ty(c.dom().left()).ty, ext_ty(c.dom().right()).ty);
    case PtComb::Kind::AssoclTimes:
      return FracComb::assocl_times(ext_ty(c.dom().left()).ty,
                                    ext_ty(c.dom().right().left()).ty,
                                    ext_ty(c.dom().right().right()).ty);
    case PtComb::Kind::AssocrTimes:
      return FracComb::assocr_times(ext_ty(c.dom().left().left()).ty,
                                    ext_ty(c.dom().left().right()).ty,
                                    ext_ty(c.dom().right()).ty);
    case PtComb::Kind::UniteTimesL:
      return FracComb::unite_times_l(ext_ty(c.cod()).ty);
    case PtComb::Kind::UnitiTimesL:
      return FracComb::uniti_times_l(ext_ty(c.dom()).ty);
    case PtComb::Kind::Eta: {
      ExtResult e = ext_ty(c.cod().left().inner());
      return FracComb::eta(e.val, e.ty);
    }
    case PtComb::Kind::Eps: {
      ExtResult e = ext_ty(c.dom().left().inner());
      return FracComb::eps(e.val, e.ty);
    }
    case PtComb::Kind::Return:
    case PtComb::Kind::Extract:
    case PtComb::Kind::TensorSing:
    case PtComb::Kind::CotensorSing:
    case PtComb::Kind::JoinSing:
    case PtComb::Kind::DuplicateSing:
    case PtComb::Kind::SplitProd:
    case PtComb::Kind::MergeProd:
      // Both sides extract to the same fractional type; the program is the
      // identity there.
      return FracComb::id(ext_ty(c.dom()).ty);
    case PtComb::Kind::SingMap:
      return ext_comb(c.first());
  }
  throw IllTyped("ext_comb: unknown pointed combinator");
}

// The no-exception property for one program.
inline bool check_ext(const PtComb& c) {
  const ExtResult in = ext_ty(c.dom());
  const ExtResult out = ext_ty(c.cod());
  const std::optional<FracVal> r = eval(ext_comb(c), in.val);
  return r.has_value() && *r == out.val;
}

}  // namespace pifrac
