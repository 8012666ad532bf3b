#include <catch2/catch_amalgamated.hpp>

#include "gen.hpp"
#include "pifrac/core.hpp"

using namespace pifrac;

namespace {
const Val F = Val::boolean(false);
const Val T = Val::boolean(true);
}  // namespace

TEST_CASE("type sizes") {
  const Ty B = Ty::boolean();
  CHECK(size_of(Ty::zero()) == 0);
  CHECK(size_of(Ty::one()) == 1);
  CHECK(size_of(B) == 2);
  CHECK(size_of(Ty::prod(B, Ty::prod(B, B))) == 8);
  CHECK(size_of(Ty::sum(Ty::one(), Ty::prod(B, B))) == 5);
}

TEST_CASE("enumeration order is fixed") {
  CHECK(enumerate(Ty::zero()).empty());

  const std::vector<Val> ones = enumerate(Ty::one());
  REQUIRE(ones.size() == 1);
  CHECK(ones[0] == Val::unit());

  const std::vector<Val> bits = enumerate(Ty::boolean());
  REQUIRE(bits.size() == 2);
  CHECK(bits[0] == F);  // every inl before every inr
  CHECK(bits[1] == T);

  const std::vector<Val> pairs = enumerate(Ty::prod(Ty::boolean(), Ty::boolean()));
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0] == Val::pair(F, F));  // left component is the outer loop
  CHECK(pairs[1] == Val::pair(F, T));
  CHECK(pairs[2] == Val::pair(T, F));
  CHECK(pairs[3] == Val::pair(T, T));
}

TEST_CASE("typing judgments") {
  CHECK(has_type(Val::unit(), Ty::one()));
  CHECK_FALSE(has_type(Val::inl(Val::unit()), Ty::one()));
  CHECK(has_type(Val::pair(F, Val::unit()), Ty::prod(Ty::boolean(), Ty::one())));
  CHECK_FALSE(has_type(F, Ty::prod(Ty::boolean(), Ty::one())));
  CHECK_FALSE(has_type(Val::inl(F), Ty::boolean()));
}

TEST_CASE("value equality is structural") {
  CHECK(Val::unit() == Val::unit());
  CHECK(F != T);
  CHECK(Val::pair(Val::unit(), Val::unit()) == Val::pair(Val::unit(), Val::unit()));
  CHECK(Val::inl(F) != Val::inl(T));
}

TEST_CASE("enumeration agrees with size and typing") {
  testgen::Rng rng(2025);
  for (int i = 0; i < 200; ++i) {
    const Ty t = testgen::random_ty(rng, 24, 4, true);
    const std::vector<Val> all = enumerate(t);
    CHECK(all.size() == size_of(t));
    for (std::size_t a = 0; a < all.size(); ++a) {
      CHECK(has_type(all[a], t));
      for (std::size_t b = a + 1; b < all.size(); ++b) CHECK(all[a] != all[b]);
    }
  }
}

TEST_CASE("every well-typed value is enumerated") {
  testgen::Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const Ty t = testgen::random_ty(rng, 16, 3);
    const Val v = testgen::random_val(rng, t);
    const std::vector<Val> all = enumerate(t);
    bool found = false;
    for (const Val& w : all) found = found || w == v;
    CHECK(found);
  }
}
