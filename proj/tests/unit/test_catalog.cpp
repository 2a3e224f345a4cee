#include <doctest.h>

#include <set>

#include "gbihom/error.hpp"
#include "test_util.hpp"

using namespace gbihom;
using namespace gbihom::testing;

TEST_SUITE("catalog") {
  TEST_CASE("pauli matrices") {
    const FieldSpec F5 = FieldSpec::prime(5);
    auto P = pauli_matrices(F5);
    Mat I = Mat::identity(F5, 2);
    CHECK(P.sigma1 * P.sigma1 == I);
    CHECK(P.sigma2 * P.sigma2 == I);
    CHECK(P.sigma3 * P.sigma3 == I);
    CHECK(P.sigma1 * P.sigma2 == -(P.sigma2 * P.sigma1));
    CHECK_THROWS_AS(pauli_matrices(FieldSpec::rationals()), NoSuchRoot);
    CHECK_THROWS_AS(pauli_matrices(FieldSpec::prime(7)), NoSuchRoot);
    CHECK_NOTHROW(pauli_matrices(FieldSpec::prime(13)));
  }

  TEST_CASE("clock and shift relations") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{7, 3}, {5, 4}, {5, 2}, {13, 4}, {11, 5}}) {
      const FieldSpec f = FieldSpec::prime(p);
      ClockShift cs = clock_shift(f, n);
      CHECK(cs.epsilon == primitive_root_of_unity(f, n));
      CHECK(cs.xa * cs.xb == cs.epsilon * (cs.xb * cs.xa));
      CHECK(cs.xa.pow(n) == Mat::identity(f, n));
      CHECK(cs.xb.pow(n) == Mat::identity(f, n));
    }
    CHECK_THROWS_AS(clock_shift(FieldSpec::prime(5), 3), NoSuchRoot);
    CHECK_THROWS_AS(clock_shift(FieldSpec::rationals(), 3), NoSuchRoot);
    CHECK(clock_shift(FieldSpec::prime(7), 3).epsilon == Scalar(FieldSpec::prime(7), 2));
  }

  TEST_CASE("entries meet their recorded expectations") {
    for (const auto& entry : catalog()) {
      CAPTURE(entry.name);
      auto A = entry.build();
      CHECK(validate(A).all_passed());
      CHECK(A.n() == entry.expected.n);
      CHECK(A.underlying().dim() == entry.expected.dim);
      CHECK(support(A).size() == entry.expected.sigma_size);
      CHECK(classes(A).classes.size() == entry.expected.class_count);
      CHECK(graded_simple(A).graded_simple == entry.expected.criterion);
      CHECK_FALSE(entry.origin.empty());
      CHECK(&catalog_entry(entry.name) == &entry);
    }
    CHECK_THROWS_AS(catalog_entry("no_such_entry"), InvalidInput);
  }

  TEST_CASE("names are unique") {
    std::set<std::string> names;
    for (const auto& entry : catalog()) CHECK(names.insert(entry.name).second);
  }
}
