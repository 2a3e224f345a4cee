#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <random>
#include <vector>

#include "gbihom/catalog.hpp"

namespace gbihom::testing {

using Rng = std::mt19937_64;

inline GroupElem el(std::initializer_list<std::int64_t> c) { return GroupElem{std::vector<std::int64_t>(c)}; }

inline Scalar random_scalar(const FieldSpec& f, Rng& rng) {
  if (f.is_prime_field()) return Scalar(f, static_cast<long>(rng() % f.modulus));
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return Scalar(f, mpq_class(num(rng), den(rng)));
}

inline Scalar random_nonzero(const FieldSpec& f, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

inline Mat random_mat(const FieldSpec& f, std::size_t n, Rng& rng, int zero_bias = 0) {
  Mat m(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (zero_bias == 0 || rng() % (zero_bias + 1) == 0) m(i, j) = random_scalar(f, rng);
  return m;
}

inline std::vector<Mat> random_mats(const FieldSpec& f, std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(random_mat(f, n, rng, 1));
  return out;
}

inline Subspace random_subspace(const FieldSpec& f, std::size_t n, std::size_t k, Rng& rng) {
  return Subspace::span(f, n, random_mats(f, n, k, rng));
}

inline Mat ints(const FieldSpec& f, const std::vector<std::vector<long>>& rows) { return Mat::from_ints(f, rows); }


using Components = std::vector<std::pair<GroupElem, std::vector<Mat>>>;

/// Identity-twisted algebra (optionally with group automorphisms) from explicit spanning sets.
inline GradedBiHomAlgebra make_algebra(const FieldSpec& f, std::size_t n, std::vector<std::int64_t> orders,
                                       const Components& comps, std::vector<std::vector<std::int64_t>> alpha = {},
                                       std::vector<std::vector<std::int64_t>> beta = {},
                                       std::optional<TwistMap> psi = std::nullopt,
                                       std::optional<TwistMap> phi = std::nullopt) {
  GroupSpec g(std::move(orders));
  GroupAuto a = alpha.empty() ? GroupAuto::identity(g) : GroupAuto(g, alpha);
  GroupAuto b = beta.empty() ? GroupAuto::identity(g) : GroupAuto(g, beta);
  std::map<GroupElem, Subspace> m;
  for (const auto& [deg, mats] : comps) m[deg] = Subspace::span(f, n, mats);
  return GradedBiHomAlgebra(f, n, BiHomGroup(g, a, b), m, psi.value_or(TwistMap::identity(f, n)),
                            phi.value_or(TwistMap::identity(f, n)));
}

inline Mat unit(const FieldSpec& f, std::size_t n, std::size_t i, std::size_t j) { return Mat::unit(f, n, i - 1, j - 1); }

}  // namespace gbihom::testing
