#pragma once
// The worked circuits as named, self-checking constructions, culminating in
// the 4-bit controlled gate built with one ancilla bit. Each entry bundles a
// runnable fractional program, a reference function it must agree with over
// its whole enumerated domain, and (where the construction-time checker has
// something to verify) a family of pointed programs indexed by input value.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pifrac/comb.hpp"
#include "pifrac/core.hpp"
#include "pifrac/extract.hpp"
#include "pifrac/frac.hpp"
#include "pifrac/pointed.hpp"

namespace pifrac {

inline bool bit_of(const FracVal& v) {
  if (v.kind() == FracVal::Kind::InL && v.child().kind() == FracVal::Kind::Unit)
    return false;
  if (v.kind() == FracVal::Kind::InR && v.child().kind() == FracVal::Kind::Unit)
    return true;
  throw IllTyped("bit_of: " + to_string(v) + " is not a boolean");
}

struct NamedCircuit {
  std::string name;
  std::string summary;
  FracComb dynamic;
  // Expected behaviour over the enumerated domain; absent means the
  // deallocation check is supposed to fire on that input.
  std::function<std::optional<FracVal>(const FracVal&)> reference;
  // One construction-time-checked program per instantiating input value.
  std::vector<PtComb> pointed;
};

namespace detail {

inline Comb seq_all_core(std::vector<Comb> steps) {
  Comb acc = steps.front();
  for (std::size_t i = 1; i < steps.size(); ++i) acc = Comb::seq(acc, steps[i]);
  return acc;
}

// Right-nested 4-bit word with the ancilla wire in front:
// a * (x1 * (x2 * (x3 * x4))).
//
// Routing for the outer step (gate on x1, x2, a): bubble the ancilla inward
// past x1 and x2, then group (x1 * (x2 * a)) against the untouched (x3 * x4).
inline Comb toffoli4_route_outer() {
  const Ty B = Ty::boolean();
  const Ty BB = Ty::prod(B, B);
  const Ty rest3 = Ty::prod(B, BB);  // x2 * (x3 * x4)
  return seq_all_core({
      Comb::assocl_times(B, B, rest3),                            // (a*x1)*rest3
      Comb::times(Comb::swap_times(B, B), Comb::id(rest3)),       // (x1*a)*rest3
      Comb::assocr_times(B, B, rest3),                            // x1*(a*rest3)
      Comb::times(Comb::id(B), Comb::assocl_times(B, B, BB)),     // x1*((a*x2)*(x3*x4))
      Comb::times(Comb::id(B),
                  Comb::times(Comb::swap_times(B, B), Comb::id(BB))),
      Comb::assocl_times(B, BB, BB),                              // (x1*(x2*a))*(x3*x4)
  });
}

// Routing for the inner step (gate on a, x3, x4): group (x1 * x2) away and
// bring (x3 * x4) next to the ancilla.
inline Comb toffoli4_route_inner() {
  const Ty B = Ty::boolean();
  const Ty BB = Ty::prod(B, B);
  return seq_all_core({
      Comb::times(Comb::id(B), Comb::assocl_times(B, B, BB)),  // a*((x1*x2)*(x3*x4))
      Comb::times(Comb::id(B), Comb::swap_times(BB, BB)),      // a*((x3*x4)*(x1*x2))
      Comb::assocl_times(B, BB, BB),                           // (a*(x3*x4))*(x1*x2)
  });
}

inline Comb toffoli4_step_outer() {
  const Ty BB = Ty::prod(Ty::boolean(), Ty::boolean());
  const Comb route = toffoli4_route_outer();
  return Comb::seq(route,
                   Comb::seq(Comb::times(toffoli_gate(), Comb::id(BB)), invert(route)));
}

inline Comb toffoli4_step_inner() {
  const Ty BB = Ty::prod(Ty::boolean(), Ty::boolean());
  const Comb route = toffoli4_route_inner();
  return Comb::seq(route,
                   Comb::seq(Comb::times(toffoli_gate(), Comb::id(BB)), invert(route)));
}

// Shared scaffold for pointed circuits that allocate one false ancilla,
// run a lifted core step on (ancilla * payload), and collect the restored
// ancilla. The split demands a false ancilla back, so an unrestored ancilla
// fails composition instead of failing at runtime.
inline PtComb with_false_ancilla(const Ty& payload_ty, const Val& payload,
                                 const Comb& step) {
  const Ty B = Ty::boolean();
  const Val F = Val::boolean(false);
  const PtTy A = PtTy::pt(B, F);
  const PtTy SA = PtTy::sing(A);
  const PtTy RA = PtTy::recip(A);
  const PtTy X = PtTy::pt(payload_ty, payload);

  const Val w0 = Val::pair(F, payload);
  const Val w1 = eval(step, w0);
  const Val out = w1.snd();
  const PtTy Xout = PtTy::pt(payload_ty, out);

  return pt_seq_all({
      PtComb::uniti_times_l(X),
      PtComb::times(PtComb::eta(A), PtComb::id(X)),
      PtComb::times(PtComb::times(PtComb::extract(A), PtComb::id(RA)), PtComb::id(X)),
      PtComb::times(PtComb::swap_times(A, RA), PtComb::id(X)),
      PtComb::assocr_times(RA, A, X),
      PtComb::times(PtComb::id(RA), PtComb::merge_prod(B, F, payload_ty, payload)),
      PtComb::times(PtComb::id(RA), PtComb::lift(step, w0)),
      PtComb::times(PtComb::id(RA), PtComb::split_prod(B, F, payload_ty, out)),
      PtComb::times(PtComb::id(RA), PtComb::times(PtComb::ret(A), PtComb::id(Xout))),
      PtComb::assocl_times(RA, SA, Xout),
      PtComb::times(PtComb::swap_times(RA, SA), PtComb::id(Xout)),
      PtComb::times(PtComb::eps(A), PtComb::id(Xout)),
      PtComb::unite_times_l(Xout),
  });
}

}  // namespace detail

// One pointed 4-bit instance: ancilla in, three lifted steps, ancilla out.
inline PtComb toffoli4_pointed(const Val& input) {
  const Ty B = Ty::boolean();
  const Ty t4 = Ty::prod(B, Ty::prod(B, Ty::prod(B, B)));
  const Comb step = detail::seq_all_core({detail::toffoli4_step_outer(),
                                          detail::toffoli4_step_inner(),
                                          detail::toffoli4_step_outer()});
  return detail::with_false_ancilla(t4, input, step);
}

// Pointed rendition of the ancilla-based boolean identity: two CNOTs copy
// the input onto the ancilla wire and return the input wire to false. The
// trailing swap leaves the collectable false in front, ancilla behind.
inline PtComb id_via_ancilla_pointed(const Val& input) {
  const Ty B = Ty::boolean();
  const Comb swap = Comb::swap_times(B, B);
  const Comb interact =
      detail::seq_all_core({swap, cnot_gate(), swap, cnot_gate(), swap});
  return detail::with_false_ancilla(B, input, interact);
}

inline NamedCircuit not_circuit() {
  const Comb g = not_gate();
  std::vector<PtComb> family;
  for (const Val& v : enumerate(g.dom())) family.push_back(PtComb::lift(g, v));
  return NamedCircuit{
      "not",
      "boolean negation",
      embed(g),
      [](const FracVal& v) -> std::optional<FracVal> {
        return FracVal::boolean(!bit_of(v));
      },
      family,
  };
}

inline NamedCircuit cnot_circuit() {
  const Comb g = cnot_gate();
  std::vector<PtComb> family;
  for (const Val& v : enumerate(g.dom())) family.push_back(PtComb::lift(g, v));
  return NamedCircuit{
      "cnot",
      "controlled negation on two bits",
      embed(g),
      [](const FracVal& v) -> std::optional<FracVal> {
        const bool c = bit_of(v.fst());
        const bool t = bit_of(v.snd());
        return FracVal::pair(FracVal::boolean(c), FracVal::boolean(c ? !t : t));
      },
      family,
  };
}

// The 3-bit gate checked one input at a time: lifting it at every value of
// its domain makes the type system confirm each row of the truth table.
inline NamedCircuit toffoli3_verified() {
  const Comb g = toffoli_gate();
  std::vector<PtComb> family;
  for (const Val& v : enumerate(g.dom())) family.push_back(PtComb::lift(g, v));
  return NamedCircuit{
      "toffoli3",
      "doubly controlled negation on three bits",
      embed(g),
      [](const FracVal& v) -> std::optional<FracVal> {
        const bool a = bit_of(v.fst());
        const bool b = bit_of(v.snd().fst());
        const bool c = bit_of(v.snd().snd());
        return FracVal::pair(
            FracVal::boolean(a),
            FracVal::pair(FracVal::boolean(b), FracVal::boolean((a && b) ? !c : c)));
      },
      family,
  };
}

// 4-bit controlled gate from three 3-bit gates and one ancilla. The dynamic
// program is the extraction of the pointed family, which is the same program
// for every instantiating input.
inline NamedCircuit toffoli4() {
  const Ty B = Ty::boolean();
  const Ty t4 = Ty::prod(B, Ty::prod(B, Ty::prod(B, B)));
  std::vector<PtComb> family;
  for (const Val& v : enumerate(t4)) family.push_back(toffoli4_pointed(v));
  FracComb dynamic = ext_comb(family.front());
  return NamedCircuit{
      "toffoli4",
      "triply controlled negation on four bits, via one ancilla",
      dynamic,
      [](const FracVal& v) -> std::optional<FracVal> {
        const bool x1 = bit_of(v.fst());
        const bool x2 = bit_of(v.snd().fst());
        const bool x3 = bit_of(v.snd().snd().fst());
        const bool x4 = bit_of(v.snd().snd().snd());
        return FracVal::pair(
            FracVal::boolean(x1),
            FracVal::pair(FracVal::boolean(x2),
                          FracVal::pair(FracVal::boolean(x3),
                                        FracVal::boolean((x1 && x2 && x3) ? !x4 : x4))));
      },
      family,
  };
}

inline NamedCircuit id_via_ancilla_circuit() {
  std::vector<PtComb> family;
  for (const Val& v : enumerate(Ty::boolean()))
    family.push_back(id_via_ancilla_pointed(v));
  return NamedCircuit{
      "id-ancilla",
      "boolean identity routed through an allocated ancilla",
      id_via_ancilla(),
      [](const FracVal& v) -> std::optional<FracVal> { return v; },
      family,
  };
}

inline NamedCircuit rev_times_circuit() {
  const FracTy B = FracTy::boolean();
  const FracVal F = FracVal::boolean(false);
  const FracVal T = FracVal::boolean(true);
  return NamedCircuit{
      "rev-times",
      "splits a pair collector into two component collectors",
      rev_times(F, B, T, B),
      [](const FracVal&) -> std::optional<FracVal> {
        return FracVal::pair(FracVal::gc(), FracVal::gc());
      },
      {},
  };
}

inline NamedCircuit rev_rev_circuit() {
  const PtTy T = PtTy::pt(Ty::boolean(), Val::boolean(true));
  const PtComb program = rev_rev(T);
  return NamedCircuit{
      "rev-rev",
      "collecting a collector rematerializes the value it collected",
      ext_comb(program),
      [](const FracVal&) -> std::optional<FracVal> { return FracVal::boolean(true); },
      {program},
  };
}

inline NamedCircuit expect_false_circuit() {
  return NamedCircuit{
      "expect-false",
      "succeeds on false, raises the deallocation check on true",
      expect_false(),
      [](const FracVal& v) -> std::optional<FracVal> {
        if (bit_of(v)) return std::nullopt;
        return FracVal::boolean(false);
      },
      {},
  };
}

inline std::vector<NamedCircuit> gallery() {
  return {not_circuit(),          cnot_circuit(),      toffoli3_verified(),
          toffoli4(),             id_via_ancilla_circuit(), rev_times_circuit(),
          rev_rev_circuit(),      expect_false_circuit()};
}

inline std::optional<NamedCircuit> find_circuit(const std::string& name) {
  for (NamedCircuit& c : gallery())
    if (c.name == name) return std::move(c);
  return std::nullopt;
}

struct CircuitReport {
  std::size_t rows = 0;
  std::size_t row_failures = 0;  // dynamic run disagrees with the reference
  bool round_trip = true;        // inverse undoes every present row
  std::size_t pointed_total = 0;
  std::size_t pointed_failures = 0;  // extraction misbehaves for a family member
  bool extraction_uniform = true;    // every member extracts to the same program
  bool ok() const {
    return row_failures == 0 && round_trip && pointed_failures == 0 && extraction_uniform;
  }
};

inline CircuitReport verify_circuit(const NamedCircuit& c) {
  CircuitReport rep;
  const std::vector<FracVal> dom_vals = enumerate(c.dynamic.dom());
  const FracComb inv = invert(c.dynamic);
  rep.rows = dom_vals.size();
  for (const FracVal& v : dom_vals) {
    const std::optional<FracVal> got = eval(c.dynamic, v);
    const std::optional<FracVal> want = c.reference(v);
    if (got != want) ++rep.row_failures;
    if (got) {
      const std::optional<FracVal> back = eval(inv, *got);
      if (!back || *back != v) rep.round_trip = false;
    }
  }
  rep.pointed_total = c.pointed.size();
  if (!c.pointed.empty()) {
    const FracComb first_ext = ext_comb(c.pointed.front());
    for (const PtComb& member : c.pointed) {
      bool good = check_ext(member);
      const FracComb ext = ext_comb(member);
      if (ext != first_ext) rep.extraction_uniform = false;
      // Extraction must agree with the shipped dynamic program everywhere.
      for (const FracVal& v : dom_vals)
        if (eval(ext, v) != eval(c.dynamic, v)) good = false;
      if (!good) ++rep.pointed_failures;
    }
  }
  return rep;
}

}  // namespace pifrac
