#include <doctest.h>

#include "gbihom/error.hpp"
#include "gbihom/linalg.hpp"
#include "test_util.hpp"

using namespace gbihom;
using namespace gbihom::testing;

namespace {

const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec Q = FieldSpec::rationals();

Mat E(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j) { return unit(f, n, i, j); }

Product ordinary() {
  return [](const Mat& a, const Mat& b) { return a * b; };
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("matrix basics") {
    Mat s3 = ints(F5, {{1, 0}, {0, -1}});
    CHECK(s3 * s3 == Mat::identity(F5, 2));
    CHECK(s3.to_string() == "[[1,0],[0,4]]");
    CHECK(ints(Q, {{1, 2}, {3, 4}}).inverse()->to_string() == "[[-2,1],[3/2,-1/2]]");
    CHECK_FALSE(ints(F5, {{1, 2}, {2, 4}}).inverse().has_value());
    CHECK(Mat::unflatten(F5, 2, s3.flatten()) == s3);
    CHECK_THROWS_AS(Mat::from_ints(F5, {{1, 2}, {3}}), DimensionMismatch);
    CHECK_THROWS_AS(Mat::identity(F5, 2) + Mat::identity(F5, 3), DimensionMismatch);
    CHECK_THROWS_AS(Mat::identity(F5, 2) + Mat::identity(Q, 2), FieldMismatch);
  }

  TEST_CASE("span") {
    Mat s3 = ints(Q, {{1, 0}, {0, -1}});
    CHECK(Subspace::span(Q, 2, {s3, -s3}).dim() == 1);
    CHECK(Subspace::span(Q, 2, {E(Q, 2, 1, 1), E(Q, 2, 2, 2), E(Q, 2, 1, 1) + E(Q, 2, 2, 2)}).dim() == 2);
    CHECK(Subspace::span(Q, 2, std::span<const Mat>{}).is_zero());
    CHECK_THROWS_AS(Subspace::span(Q, 2, {Mat::identity(Q, 3)}), DimensionMismatch);
    // Leading ones on the first nonzero column.
    Subspace s = Subspace::span(Q, 2, {ints(Q, {{2, 4}, {0, 6}})});
    CHECK(s.basis()[0] == ints(Q, {{1, 2}, {0, 3}}));
  }

  TEST_CASE("lattice operations") {
    Subspace a = Subspace::span(Q, 2, {E(Q, 2, 1, 2)}), b = Subspace::span(Q, 2, {E(Q, 2, 2, 1)});
    CHECK(sum(a, b).dim() == 2);
    CHECK(intersect(a, b).is_zero());
    Mat s1 = ints(F5, {{0, 1}, {1, 0}}), s2 = ints(F5, {{0, 2}, {3, 0}});
    CHECK(equals(Subspace::span(F5, 2, {s1, s2}), Subspace::span(F5, 2, {s2, s1})));
    Subspace u = Subspace::span(Q, 2, {E(Q, 2, 1, 1) + E(Q, 2, 2, 2), E(Q, 2, 1, 1)});
    Subspace v = Subspace::span(Q, 2, {E(Q, 2, 2, 2)});
    CHECK(intersect(u, v) == v);
    CHECK(contains(u, E(Q, 2, 2, 2)));
    CHECK_FALSE(contains(u, E(Q, 2, 1, 2)));
    CHECK_THROWS_AS(sum(a, Subspace::zero(Q, 3)), DimensionMismatch);
  }

  TEST_CASE("product span") {
    Mat s3 = ints(F5, {{1, 0}, {0, -1}});
    Subspace u = Subspace::span(F5, 2, {s3});
    CHECK(product_span(u, u, ordinary()) == Subspace::span(F5, 2, {Mat::identity(F5, 2)}));
    CHECK(product_span(Subspace::zero(F5, 2), u, ordinary()).is_zero());
    Subspace b1 = Subspace::span(F5, 4, {E(F5, 4, 1, 2)}), b2 = Subspace::span(F5, 4, {E(F5, 4, 3, 4)});
    CHECK(product_span(b1, b2, ordinary()).is_zero());
  }

  TEST_CASE("annihilator kernel") {
    std::vector<LinearMap> maps;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Mat b = Mat::unit(F5, 2, i, j);
        maps.push_back([b](const Mat& v) { return v * b; });
        maps.push_back([b](const Mat& v) { return b * v; });
      }
    CHECK(annihilator_kernel(Subspace::full(F5, 2), maps).is_zero());
    CHECK(annihilator_kernel(Subspace::full(F5, 2), std::span<const LinearMap>{}) == Subspace::full(F5, 2));

    // Pauli corner of M_3 plus E33: E33 is not annihilated (E33 E33 = E33), but
    // the corner block is annihilated by E33 from both sides.
    std::vector<Mat> gens{E(F5, 3, 1, 1) + E(F5, 3, 2, 2), E(F5, 3, 1, 1) - E(F5, 3, 2, 2),
                          E(F5, 3, 1, 2) + E(F5, 3, 2, 1), E(F5, 3, 1, 2) - E(F5, 3, 2, 1), E(F5, 3, 3, 3)};
    std::vector<LinearMap> corner_maps;
    for (std::size_t k = 0; k < 4; ++k) {
      Mat b = gens[k];
      corner_maps.push_back([b](const Mat& v) { return v * b; });
      corner_maps.push_back([b](const Mat& v) { return b * v; });
    }
    CHECK(annihilator_kernel(F5, 3, std::span<const Mat>(gens), corner_maps) ==
          Subspace::span(F5, 3, {E(F5, 3, 3, 3)}));
    std::vector<LinearMap> all_maps = corner_maps;
    all_maps.push_back([&](const Mat& v) { return v * gens[4]; });
    CHECK(annihilator_kernel(F5, 3, std::span<const Mat>(gens), all_maps).is_zero());
  }

  TEST_CASE("complement and coordinates") {
    Subspace whole = Subspace::full(Q, 2);
    Subspace part = Subspace::span(Q, 2, {Mat::identity(Q, 2)});
    Subspace c = complement(part, whole);
    CHECK(c.dim() == 3);
    CHECK(intersect(c, part).is_zero());
    CHECK(sum(c, part) == whole);
    CHECK_THROWS_AS(complement(whole, part), DimensionMismatch);

    std::vector<Mat> basis{Mat::identity(Q, 2), ints(Q, {{1, 0}, {0, -1}}), ints(Q, {{0, 1}, {1, 0}})};
    CoordinateSystem cs(Q, 2, basis);
    auto x = cs.coordinates(ints(Q, {{3, 2}, {2, -1}}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(Q, 1));
    CHECK((*x)[1] == Scalar(Q, 2));
    CHECK((*x)[2] == Scalar(Q, 2));
    CHECK_FALSE(cs.coordinates(E(Q, 2, 1, 2)).has_value());
    CHECK_THROWS_AS(CoordinateSystem(Q, 2, {Mat::identity(Q, 2), Mat::identity(Q, 2)}), InvalidInput);
  }

  TEST_CASE("canonical form and dimension formula on random subspaces") {
    Rng rng(7);
    for (const FieldSpec& f : {F5, FieldSpec::prime(2), Q}) {
      for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + rng() % 2;
        Subspace u = random_subspace(f, n, rng() % 6, rng), v = random_subspace(f, n, rng() % 6, rng);
        CHECK(Subspace::span(f, n, u.basis()) == u);
        CHECK(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim());
        CHECK(sum(u, v).contains(u));
        CHECK(u.contains(intersect(u, v)));
        CHECK(v.contains(intersect(u, v)));
        Subspace c = complement(intersect(u, v), u);
        CHECK(sum(c, intersect(u, v)) == u);
        CHECK(c.dim() + intersect(u, v).dim() == u.dim());
      }
    }
  }

  TEST_CASE("product span equals the span over redundant spanning sets") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
      auto us = random_mats(F5, 2, 1 + rng() % 3, rng), vs = random_mats(F5, 2, 1 + rng() % 3, rng);
      Subspace u = Subspace::span(F5, 2, us), v = Subspace::span(F5, 2, vs);
      // Redundant spanning sets: add random combinations.
      auto widen = [&](std::vector<Mat> xs) {
        std::size_t k = xs.size();
        for (std::size_t i = 0; i < k; ++i) xs.push_back(random_scalar(F5, rng) * xs[i] + xs[(i + 1) % k]);
        return xs;
      };
      std::vector<Mat> prods;
      for (const auto& a : widen(us))
        for (const auto& b : widen(vs)) prods.push_back(a * b);
      CHECK(product_span(u, v, ordinary()) == Subspace::span(F5, 2, prods));
    }
  }
}
