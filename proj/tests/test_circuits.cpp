#include <catch2/catch_amalgamated.hpp>

#include "pifrac/circuits.hpp"

using namespace pifrac;

namespace {
const Val F = Val::boolean(false);
const Val T = Val::boolean(true);

FracVal fourbits(bool a, bool b, bool c, bool d) {
  return FracVal::pair(
      FracVal::boolean(a),
      FracVal::pair(FracVal::boolean(b),
                    FracVal::pair(FracVal::boolean(c), FracVal::boolean(d))));
}
}  // namespace

TEST_CASE("three-bit gate verified one input at a time") {
  const NamedCircuit c = toffoli3_verified();
  REQUIRE(c.pointed.size() == 8);

  // each family member's codomain focus is the reference row
  for (const PtComb& member : c.pointed) {
    const FracVal in = carrier(member.dom());
    const auto want = c.reference(in);
    REQUIRE(want.has_value());
    CHECK(carrier(member.cod()) == *want);
  }

  // the one interesting row, pinned
  const auto flipped = eval(c.dynamic, FracVal::pair(FracVal::boolean(true),
                                                     FracVal::pair(FracVal::boolean(true),
                                                                   FracVal::boolean(false))));
  REQUIRE(flipped.has_value());
  CHECK(*flipped == FracVal::pair(FracVal::boolean(true),
                                  FracVal::pair(FracVal::boolean(true),
                                                FracVal::boolean(true))));

  // extraction does not depend on the instantiating value
  const FracComb first = ext_comb(c.pointed.front());
  for (const PtComb& member : c.pointed) CHECK(ext_comb(member) == first);
  CHECK(first == c.dynamic);

  CHECK(verify_circuit(c).ok());
}

TEST_CASE("four-bit gate with one ancilla") {
  const NamedCircuit c = toffoli4();
  REQUIRE(c.pointed.size() == 16);
  REQUIRE(c.dynamic.dom() == c.dynamic.cod());

  std::size_t present = 0;
  for (const FracVal& v : enumerate(c.dynamic.dom())) {
    const auto got = eval(c.dynamic, v);
    REQUIRE(got.has_value());  // the ancilla always comes back false
    ++present;
    CHECK(*got == *c.reference(v));
  }
  CHECK(present == 16);

  // pinned rows
  CHECK(*eval(c.dynamic, fourbits(true, true, true, false)) ==
        fourbits(true, true, true, true));
  CHECK(*eval(c.dynamic, fourbits(true, true, true, true)) ==
        fourbits(true, true, true, false));
  CHECK(*eval(c.dynamic, fourbits(false, true, true, true)) ==
        fourbits(false, true, true, true));

  // every pointed instantiation extracts to the same program
  const FracComb first = ext_comb(c.pointed.front());
  for (const PtComb& member : c.pointed) {
    CHECK(check_ext(member));
    CHECK(ext_comb(member) == first);
  }

  CHECK(verify_circuit(c).ok());
}

TEST_CASE("pointed ancilla identity agrees with the handwritten program") {
  const NamedCircuit c = id_via_ancilla_circuit();
  REQUIRE(c.pointed.size() == 2);
  for (const PtComb& member : c.pointed) CHECK(check_ext(member));

  // extraction differs syntactically from the handwritten circuit but must
  // agree with it on every input
  const FracComb ext = ext_comb(c.pointed.front());
  for (const FracVal& v : enumerate(c.dynamic.dom())) {
    CHECK(eval(ext, v) == eval(c.dynamic, v));
  }
  CHECK(verify_circuit(c).ok());
}

TEST_CASE("gallery invariants") {
  const std::vector<NamedCircuit> all = gallery();
  CHECK(all.size() >= 5);

  for (const NamedCircuit& c : all) {
    INFO(c.name);
    const CircuitReport rep = verify_circuit(c);
    CHECK(rep.ok());
    for (const PtComb& member : c.pointed) CHECK(check_ext(member));
  }
}

TEST_CASE("gallery lookup by name") {
  CHECK(find_circuit("toffoli4").has_value());
  CHECK(find_circuit("rev-times").has_value());
  CHECK_FALSE(find_circuit("nonesuch").has_value());
}

TEST_CASE("expect-false rows") {
  const NamedCircuit c = expect_false_circuit();
  const CircuitReport rep = verify_circuit(c);
  // one row is deliberately absent; the reference says so, and the report
  // therefore still passes
  CHECK(rep.ok());
  CHECK_FALSE(eval(c.dynamic, FracVal::boolean(true)).has_value());
  CHECK(eval(c.dynamic, FracVal::boolean(false)).has_value());
}
