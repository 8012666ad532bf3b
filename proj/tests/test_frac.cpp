#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "pifrac/frac.hpp"

using namespace pifrac;

namespace {
const FracVal F = FracVal::boolean(false);
const FracVal T = FracVal::boolean(true);
const FracTy B = FracTy::boolean();
}  // namespace

TEST_CASE("typing of eta and eps") {
  const FracComb e = FracComb::eta(F, B);
  CHECK(e.dom() == FracTy::one());
  CHECK(e.cod() == FracTy::prod(B, FracTy::frac(B, F)));

  const FracComb k = FracComb::eps(F, B);
  CHECK(k.dom() == FracTy::prod(B, FracTy::frac(B, F)));
  CHECK(k.cod() == FracTy::one());

  const FracComb chain = FracComb::seq(e, FracComb::swap_times(B, FracTy::frac(B, F)));
  CHECK(chain.cod() == FracTy::prod(FracTy::frac(B, F), B));
}

TEST_CASE("eta and eps need an inhabited witness") {
  CHECK_THROWS_AS(FracComb::eta(FracVal::unit(), FracTy::zero()), TypeMismatch);
  CHECK_THROWS_AS(FracComb::eps(FracVal::unit(), FracTy::zero()), TypeMismatch);
  CHECK_THROWS_AS(FracTy::frac(FracTy::boolean(), FracVal::unit()), TypeMismatch);
}

TEST_CASE("fraction types are singleton-inhabited") {
  const FracTy f = FracTy::frac(B, F);
  CHECK(size_of(f) == 1);
  const std::vector<FracVal> vals = enumerate(f);
  REQUIRE(vals.size() == 1);
  CHECK(vals[0] == FracVal::gc());
  CHECK(has_type(FracVal::gc(), f));
  CHECK_FALSE(has_type(F, f));
  CHECK_FALSE(has_type(FracVal::gc(), B));

  // fractions nest
  const FracTy ff = FracTy::frac(f, FracVal::gc());
  CHECK(size_of(ff) == 1);
  CHECK(has_type(FracVal::gc(), ff));
}

TEST_CASE("allocation and the deallocation check") {
  const FracComb e = FracComb::eta(T, B);
  const auto out = eval(e, FracVal::unit());
  REQUIRE(out.has_value());
  CHECK(*out == FracVal::pair(T, FracVal::gc()));

  const FracComb k = FracComb::eps(T, B);
  CHECK(eval(k, FracVal::pair(T, FracVal::gc())) == FracVal::unit());
  CHECK_FALSE(eval(k, FracVal::pair(F, FracVal::gc())).has_value());
}

TEST_CASE("local allocate-collect round trip") {
  testgen::Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const Ty t = testgen::random_ty(rng, 4, 2);
    for (const Val& v : enumerate(t)) {
      const FracComb p = FracComb::seq(FracComb::eta(embed(v), embed(t)),
                                       FracComb::eps(embed(v), embed(t)));
      CHECK(eval(p, FracVal::unit()) == FracVal::unit());
    }
  }
}

namespace {

// eta at v, transport the allocated value through c, then try to collect.
FracComb transport_probe(const Comb& c, const Val& v) {
  const FracTy td = embed(c.dom());
  const FracVal vd = embed(v);
  return seq_all({FracComb::eta(vd, td),
                  FracComb::times(embed(c), FracComb::id(FracTy::frac(td, vd))),
                  FracComb::eps(vd, td)});
}

}  // namespace

TEST_CASE("the check fails exactly when the transported value changed") {
  // fixed witnesses of both outcomes
  CHECK(eval(transport_probe(Comb::id(Ty::boolean()), Val::boolean(false)),
             FracVal::unit())
            .has_value());
  CHECK_FALSE(eval(transport_probe(not_gate(), Val::boolean(false)), FracVal::unit())
                  .has_value());
  CHECK_FALSE(eval(transport_probe(not_gate(), Val::boolean(true)), FracVal::unit())
                  .has_value());

  testgen::Rng rng(10);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const Ty t = testgen::random_ty(rng, 4, 2);
    const Val v = testgen::random_val(rng, t);
    const Comb c = testgen::random_comb(rng, t, 3);
    if (c.cod() != t) continue;  // the collector's type has to come back around
    ++checked;
    const bool survived = eval(transport_probe(c, v), FracVal::unit()).has_value();
    CHECK(survived == (eval(c, v) == v));
  }
  CHECK(checked >= 30);
}

TEST_CASE("boolean collect example") {
  const FracComb p = expect_false();
  CHECK(p.dom() == B);
  CHECK(p.cod() == B);
  CHECK(eval(p, F).has_value());
  CHECK_FALSE(eval(p, T).has_value());
}

TEST_CASE("absence is sticky") {
  const FracComb bad = expect_false();  // absent on true
  const FracComb in_times = FracComb::times(bad, FracComb::id(B));
  CHECK_FALSE(eval(in_times, FracVal::pair(T, F)).has_value());
  CHECK(eval(in_times, FracVal::pair(F, T)).has_value());

  const FracComb in_seq =
      FracComb::seq(FracComb::swap_times(B, B),
                    FracComb::times(FracComb::id(B), bad));
  CHECK_FALSE(eval(in_seq, FracVal::pair(T, F)).has_value());  // the T lands on bad
  CHECK(eval(in_seq, FracVal::pair(F, T)).has_value());

  const FracComb in_plus = FracComb::plus(embed(not_gate()), bad);
  CHECK_FALSE(eval(in_plus, FracVal::inr(T)).has_value());
  CHECK(eval(in_plus, FracVal::inl(T)).has_value());
}

TEST_CASE("conservativity over the core tier") {
  testgen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Comb c = testgen::random_comb(rng, 5);
    const FracComb d = embed(c);
    CHECK(d.dom() == embed(c.dom()));
    CHECK(d.cod() == embed(c.cod()));
    for (const Val& v : enumerate(c.dom())) {
      const auto out = eval(d, embed(v));
      REQUIRE(out.has_value());
      CHECK(*out == embed(eval(c, v)));
    }
  }
}

TEST_CASE("identity via an allocated ancilla") {
  const FracComb p = id_via_ancilla();
  CHECK(p.dom() == B);
  CHECK(p.cod() == B);
  for (const FracVal& v : enumerate(B)) {
    const auto out = eval(p, v);
    REQUIRE(out.has_value());  // the collector always receives false
    CHECK(*out == v);
  }
}

TEST_CASE("a pair collector splits into component collectors") {
  const FracComb p = rev_times(F, B, T, B);
  CHECK(p.dom() ==
        FracTy::frac(FracTy::prod(B, B), FracVal::pair(F, T)));
  CHECK(p.cod() == FracTy::prod(FracTy::frac(B, F), FracTy::frac(B, T)));

  const auto out = eval(p, FracVal::gc());
  REQUIRE(out.has_value());
  CHECK(*out == FracVal::pair(FracVal::gc(), FracVal::gc()));

  const FracComb both = FracComb::seq(p, invert(p));
  CHECK(eval(both, FracVal::gc()) == FracVal::gc());

  // other witnesses, exhaustively over small types
  testgen::Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const Ty t1 = testgen::random_ty(rng, 4, 2);
    const Ty t2 = testgen::random_ty(rng, 4, 2);
    const FracComb q = rev_times(embed(testgen::random_val(rng, t1)), embed(t1),
                                 embed(testgen::random_val(rng, t2)), embed(t2));
    CHECK(eval(q, FracVal::gc()) == FracVal::pair(FracVal::gc(), FracVal::gc()));
  }
}

TEST_CASE("inversion over fractional programs") {
  const FracComb e = FracComb::eta(F, B);
  CHECK(invert(e) == FracComb::eps(F, B));
  CHECK(invert(invert(e)) == e);

  testgen::Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const FracComb c = testgen::random_frac_comb(rng, 5);
    CHECK(invert(invert(c)) == c);
    CHECK(invert(c).dom() == c.cod());
    CHECK(invert(c).cod() == c.dom());
  }
}

TEST_CASE("truth tables cover the enumerated domain") {
  const auto rows = truth_table(expect_false());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].in == F);
  REQUIRE(rows[0].out.has_value());
  CHECK(*rows[0].out == F);
  CHECK(rows[1].in == T);
  CHECK_FALSE(rows[1].out.has_value());
}

TEST_CASE("program verification report") {
  CHECK(verify_program(id_via_ancilla()).ok());
  CHECK(verify_program(embed(toffoli_gate())).ok());

  const ProgramReport bad = verify_program(expect_false());
  CHECK_FALSE(bad.ok());
  CHECK(bad.absent == 1);
}
