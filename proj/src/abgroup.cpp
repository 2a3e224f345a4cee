#include "gbihom/abgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "gbihom/error.hpp"

namespace gbihom {

std::string GroupElem::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

GroupSpec::GroupSpec(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  size_ = 1;
  for (auto m : orders_) {
    if (m < 1) throw InvalidInput("group orders must be >= 1");
    size_ *= static_cast<std::size_t>(m);
  }
}

bool GroupSpec::contains(const GroupElem& g) const {
  if (g.coords.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (g.coords[i] < 0 || g.coords[i] >= orders_[i]) return false;
  return true;
}

GroupElem GroupSpec::reduce(std::vector<std::int64_t> coords) const {
  if (coords.size() != orders_.size()) throw DimensionMismatch("element rank differs from group rank");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] %= orders_[i];
    if (coords[i] < 0) coords[i] += orders_[i];
  }
  return GroupElem{std::move(coords)};
}

GroupElem GroupSpec::zero() const { return GroupElem{std::vector<std::int64_t>(orders_.size(), 0)}; }

GroupElem GroupSpec::add(const GroupElem& a, const GroupElem& b) const {
  std::vector<std::int64_t> c(orders_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return reduce(std::move(c));
}

GroupElem GroupSpec::neg(const GroupElem& a) const {
  std::vector<std::int64_t> c(orders_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
  return reduce(std::move(c));
}

std::size_t GroupSpec::index_of(const GroupElem& g) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(g.coords[i]);
  return idx;
}

GroupElem GroupSpec::element(std::size_t index) const {
  std::vector<std::int64_t> c(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    c[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(orders_[i]));
    index /= static_cast<std::size_t>(orders_[i]);
  }
  return GroupElem{std::move(c)};
}

std::vector<GroupElem> GroupSpec::elements() const {
  std::vector<GroupElem> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

GroupAuto::GroupAuto(const GroupSpec& group, std::vector<std::vector<std::int64_t>> matrix)
    : group_(group), matrix_(std::move(matrix)) {
  const std::size_t k = group_.rank();
  if (matrix_.size() != k) throw InvalidInput("automorphism matrix must be " + std::to_string(k) + "x" + std::to_string(k));
  for (const auto& row : matrix_)
    if (row.size() != k) throw InvalidInput("automorphism matrix must be square of the group rank");
  const auto& m = group_.orders();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if ((matrix_[i][j] * m[j]) % m[i] != 0)
        throw InvalidInput("automorphism matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is not well defined on the presentation");

  image_.resize(group_.size());
  preimage_.assign(group_.size(), group_.size());
  for (std::size_t idx = 0; idx < group_.size(); ++idx) {
    GroupElem g = group_.element(idx);
    std::vector<std::int64_t> c(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) c[i] += (matrix_[i][j] % m[i]) * g.coords[j] % m[i];
    std::size_t img = group_.index_of(group_.reduce(std::move(c)));
    if (preimage_[img] != group_.size())
      throw InvalidInput("automorphism is not injective: " + group_.element(preimage_[img]).to_string() +
                         " and " + g.to_string() + " share an image");
    image_[idx] = img;
    preimage_[img] = idx;
  }
}

GroupAuto GroupAuto::identity(const GroupSpec& group) {
  std::vector<std::vector<std::int64_t>> id(group.rank(), std::vector<std::int64_t>(group.rank(), 0));
  for (std::size_t i = 0; i < group.rank(); ++i) id[i][i] = 1;
  return GroupAuto(group, std::move(id));
}

GroupElem GroupAuto::apply(const GroupElem& g) const {
  return group_.element(image_[group_.index_of(g)]);
}

GroupElem GroupAuto::apply_inverse(const GroupElem& g) const {
  return group_.element(preimage_[group_.index_of(g)]);
}

GroupElem GroupAuto::power(const GroupElem& g, std::uint64_t e) const {
  std::size_t idx = group_.index_of(g);
  for (std::uint64_t i = 0; i < e; ++i) idx = image_[idx];
  return group_.element(idx);
}

bool GroupAuto::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

BiHomGroup::BiHomGroup(GroupSpec group, GroupAuto alpha, GroupAuto beta)
    : group_(std::move(group)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (!(alpha_.group() == group_) || !(beta_.group() == group_))
    throw InvalidInput("automorphisms act on a different group");
}

BiHomGroup BiHomGroup::trivial_twist(const GroupSpec& group) {
  return BiHomGroup(group, GroupAuto::identity(group), GroupAuto::identity(group));
}

GroupElem bihom_sum(const BiHomGroup& G, const GroupElem& g, const GroupElem& h) {
  return G.group().add(G.alpha_of(g), G.beta_of(h));
}

std::vector<OrbitPoint> orbit_points(const BiHomGroup& G, const GroupElem& g, bool signed_orbit) {
  const GroupSpec& grp = G.group();
  const auto& a = G.alpha().table();
  const auto& b = G.beta().table();
  std::map<std::size_t, OrbitPoint> seen;
  std::deque<std::size_t> work;
  std::size_t start = grp.index_of(g);
  seen.emplace(start, OrbitPoint{g, 0, 0, +1});
  work.push_back(start);
  while (!work.empty()) {
    std::size_t cur = work.front();
    work.pop_front();
    const OrbitPoint here = seen.at(cur);
    for (int which = 0; which < 2; ++which) {
      std::size_t nxt = which == 0 ? a[cur] : b[cur];
      if (seen.count(nxt)) continue;
      OrbitPoint p{grp.element(nxt), here.alpha_exp + (which == 0 ? 1 : 0), here.beta_exp + (which == 1 ? 1 : 0), +1};
      seen.emplace(nxt, std::move(p));
      work.push_back(nxt);
    }
  }
  if (signed_orbit) {
    std::vector<OrbitPoint> positives;
    for (const auto& [idx, p] : seen) positives.push_back(p);
    for (const auto& p : positives) {
      std::size_t neg = grp.index_of(grp.neg(p.element));
      if (seen.count(neg)) continue;
      seen.emplace(neg, OrbitPoint{grp.element(neg), p.alpha_exp, p.beta_exp, -1});
    }
  }
  std::vector<OrbitPoint> out;
  out.reserve(seen.size());
  for (auto& [idx, p] : seen) out.push_back(std::move(p));
  return out;
}

std::vector<GroupElem> orbit(const BiHomGroup& G, const GroupElem& g, bool signed_orbit) {
  std::vector<GroupElem> out;
  for (auto& p : orbit_points(G, g, signed_orbit)) out.push_back(std::move(p.element));
  return out;
}

ElementWitness check_commuting(const BiHomGroup& G) {
  const auto& a = G.alpha().table();
  const auto& b = G.beta().table();
  // Standard generators first; they determine both maps.
  for (std::size_t k = 0; k < G.group().rank(); ++k) {
    std::vector<std::int64_t> e(G.group().rank(), 0);
    e[k] = 1;
    GroupElem g = G.group().reduce(std::move(e));
    std::size_t i = G.group().index_of(g);
    if (a[b[i]] != b[a[i]]) return {false, g};
  }
  for (std::size_t i = 0; i < G.group().size(); ++i) {
    if (a[b[i]] != b[a[i]]) return {false, G.group().element(i)};
  }
  return {true, std::nullopt};
}

}  // namespace gbihom
