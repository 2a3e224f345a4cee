#include "gbihom/algebra.hpp"

#include <algorithm>
#include <set>

#include "gbihom/error.hpp"

namespace gbihom {

TwistMap TwistMap::identity(FieldSpec field, std::size_t n) { return conjugation(Mat::identity(field, n)); }

TwistMap TwistMap::conjugation(const Mat& s) {
  auto inv = s.inverse();
  if (!inv) throw InvalidInput("conjugator " + s.to_string() + " is singular");
  TwistMap t;
  t.kind_ = Kind::Conjugation;
  t.s_ = s;
  t.s_inv_ = *inv;
  return t;
}

TwistMap TwistMap::from_images(FieldSpec field, std::size_t n, std::vector<Mat> domain, std::vector<Mat> images) {
  if (domain.size() != images.size())
    throw InvalidInput("twist has " + std::to_string(images.size()) + " images for a basis of " +
                       std::to_string(domain.size()));
  for (const auto& m : images)
    if (m.n() != n || !(m.field() == field)) throw InvalidInput("twist image has the wrong shape or field");
  TwistMap t;
  t.kind_ = Kind::Images;
  try {
    t.domain_ = CoordinateSystem(field, n, std::move(domain));
  } catch (const InvalidInput&) {
    throw InvalidInput("twist images need a linearly independent homogeneous basis");
  }
  t.images_ = std::move(images);
  return t;
}

Mat TwistMap::apply(const Mat& x) const {
  if (kind_ == Kind::Conjugation) return s_ * x * s_inv_;
  auto c = domain_.coordinates(x);
  if (!c) throw NotInAlgebra("twist applied outside its domain: " + x.to_string());
  Mat out(x.field(), x.n());
  for (std::size_t i = 0; i < c->size(); ++i)
    if (!(*c)[i].is_zero()) out += (*c)[i] * images_[i];
  return out;
}

std::string HomogeneousElement::label() const {
  return "M" + degree.to_string() + "[" + std::to_string(index) + "]";
}

GradedBiHomAlgebra::GradedBiHomAlgebra(FieldSpec field, std::size_t n, BiHomGroup group,
                                       std::map<GroupElem, Subspace> components, TwistMap psi, TwistMap phi)
    : field_(field), n_(n), group_(std::move(group)), psi_(std::move(psi)), phi_(std::move(phi)) {
  if (n_ == 0) throw DimensionMismatch("matrix dimension must be positive");
  for (auto& [g, sub] : components) {
    if (!group_.group().contains(g)) throw InvalidInput("degree " + g.to_string() + " is not an element of the group");
    if (sub.n() != n_) throw DimensionMismatch("component " + g.to_string() + " lives in the wrong matrix space");
    if (!(sub.field() == field_)) throw FieldMismatch("component " + g.to_string() + " over the wrong field");
    if (!sub.is_zero()) components_.emplace(g, std::move(sub));
  }
  if (psi_.is_conjugation() && (psi_.conjugator().n() != n_ || !(psi_.conjugator().field() == field_)))
    throw DimensionMismatch("psi conjugator has the wrong shape or field");
  if (phi_.is_conjugation() && (phi_.conjugator().n() != n_ || !(phi_.conjugator().field() == field_)))
    throw DimensionMismatch("phi conjugator has the wrong shape or field");
  underlying_ = Subspace::zero(field_, n_);
  zero_ = underlying_;
  for (const auto& [g, sub] : components_) {
    underlying_ = sum(underlying_, sub);
    auto b = sub.basis();
    for (std::size_t i = 0; i < b.size(); ++i) basis_.push_back({g, i, std::move(b[i])});
  }
}

const Subspace& GradedBiHomAlgebra::component(const GroupElem& g) const {
  auto it = components_.find(g);
  return it == components_.end() ? zero_ : it->second;
}

std::size_t GradedBiHomAlgebra::total_component_dim() const {
  std::size_t d = 0;
  for (const auto& [g, sub] : components_) d += sub.dim();
  return d;
}

Product GradedBiHomAlgebra::star_product() const {
  return [this](const Mat& x, const Mat& y) { return star_unchecked(x, y); };
}

Mat star(const GradedBiHomAlgebra& A, const Mat& x, const Mat& y) {
  if (!A.underlying().contains(x)) throw NotInAlgebra("left factor " + x.to_string());
  if (!A.underlying().contains(y)) throw NotInAlgebra("right factor " + y.to_string());
  return A.star_unchecked(x, y);
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

// Runs body and turns a NotInAlgebra escape into a failure with that message.
template <typename F>
AxiomCheck guarded(std::string name, F&& body) {
  AxiomCheck c{std::move(name), true, {}};
  try {
    if (auto w = body()) {
      c.passed = false;
      c.witness = *w;
    }
  } catch (const NotInAlgebra& e) {
    c.passed = false;
    c.witness = e.what();
  }
  return c;
}

AxiomCheck twist_bijective(const GradedBiHomAlgebra& A, const TwistMap& t, const std::string& name) {
  return guarded(name + "_bijective", [&]() -> std::optional<std::string> {
    std::vector<Mat> images;
    for (const auto& h : A.homogeneous_basis()) images.push_back(t.apply(h.value));
    Subspace img = Subspace::span(A.field(), A.n(), images);
    if (img.dim() != A.underlying().dim())
      return name + " is not injective on A (image dim " + std::to_string(img.dim()) + " < " +
             std::to_string(A.underlying().dim()) + ")";
    if (!A.underlying().contains(img)) return name + "(A) is not contained in A";
    return std::nullopt;
  });
}

AxiomCheck twist_multiplicative(const GradedBiHomAlgebra& A, const TwistMap& t, const std::string& name) {
  return guarded(name + "_multiplicative", [&]() -> std::optional<std::string> {
    const auto& b = A.homogeneous_basis();
    for (const auto& x : b)
      for (const auto& y : b)
        if (!(t.apply(x.value * y.value) == t.apply(x.value) * t.apply(y.value)))
          return name + "(xy) != " + name + "(x)" + name + "(y) at x=" + x.label() + ", y=" + y.label();
    return std::nullopt;
  });
}

AxiomCheck twist_star_multiplicative(const GradedBiHomAlgebra& A, const TwistMap& t, const std::string& name) {
  return guarded(name + "_star_multiplicative", [&]() -> std::optional<std::string> {
    const auto& b = A.homogeneous_basis();
    for (const auto& x : b)
      for (const auto& y : b)
        if (!(t.apply(A.star_unchecked(x.value, y.value)) == A.star_unchecked(t.apply(x.value), t.apply(y.value))))
          return name + "(x*y) != " + name + "(x)*" + name + "(y) at x=" + x.label() + ", y=" + y.label();
    return std::nullopt;
  });
}

AxiomCheck twist_compatible(const GradedBiHomAlgebra& A, const TwistMap& t, const GroupAuto& aut,
                            const std::string& name, const std::string& aut_name) {
  return guarded(name + "_compatible", [&]() -> std::optional<std::string> {
    for (const auto& h : A.homogeneous_basis()) {
      GroupElem target = aut.apply(h.degree);
      if (!A.component(target).contains(t.apply(h.value)))
        return name + "(" + h.label() + ") is not in M" + target.to_string() + " = M_" + aut_name + h.degree.to_string();
    }
    return std::nullopt;
  });
}

AxiomCheck twist_component_equality(const GradedBiHomAlgebra& A, const TwistMap& t, const GroupAuto& aut,
                                    const std::string& name) {
  return guarded(name + "_component_equality", [&]() -> std::optional<std::string> {
    for (const auto& [g, sub] : A.components()) {
      std::vector<Mat> imgs;
      for (const auto& m : sub.basis()) imgs.push_back(t.apply(m));
      GroupElem target = aut.apply(g);
      if (!(Subspace::span(A.field(), A.n(), imgs) == A.component(target)))
        return name + "(M" + g.to_string() + ") != M" + target.to_string();
    }
    return std::nullopt;
  });
}

}  // namespace

ValidationReport validate(const GradedBiHomAlgebra& A) {
  ValidationReport rep;
  const auto& G = A.group();
  const auto& basis = A.homogeneous_basis();

  {
    auto w = check_commuting(G);
    rep.checks.push_back({"alpha_beta_commute", w.passed,
                          w.passed ? "" : "alpha(beta(g)) != beta(alpha(g)) at g=" + w.witness->to_string()});
  }
  {
    AxiomCheck c{"components_independent", true, {}};
    if (A.underlying().dim() != A.total_component_dim()) {
      c.passed = false;
      c.witness = "dim of sum " + std::to_string(A.underlying().dim()) + " < sum of dims " +
                  std::to_string(A.total_component_dim());
    }
    rep.checks.push_back(std::move(c));
  }
  rep.checks.push_back(guarded("underlying_closed", [&]() -> std::optional<std::string> {
    for (const auto& x : basis)
      for (const auto& y : basis)
        if (!A.underlying().contains(x.value * y.value))
          return "x y leaves A at x=" + x.label() + ", y=" + y.label();
    return std::nullopt;
  }));
  rep.checks.push_back(twist_bijective(A, A.psi(), "psi"));
  rep.checks.push_back(twist_bijective(A, A.phi(), "phi"));
  rep.checks.push_back(twist_multiplicative(A, A.psi(), "psi"));
  rep.checks.push_back(twist_multiplicative(A, A.phi(), "phi"));
  rep.checks.push_back(guarded("twists_commute", [&]() -> std::optional<std::string> {
    for (const auto& x : basis)
      if (!(A.psi().apply(A.phi().apply(x.value)) == A.phi().apply(A.psi().apply(x.value))))
        return "psi(phi(x)) != phi(psi(x)) at x=" + x.label();
    return std::nullopt;
  }));
  rep.checks.push_back(twist_compatible(A, A.psi(), G.alpha(), "psi", "alpha"));
  rep.checks.push_back(twist_compatible(A, A.phi(), G.beta(), "phi", "beta"));
  rep.checks.push_back(twist_component_equality(A, A.psi(), G.alpha(), "psi"));
  rep.checks.push_back(twist_component_equality(A, A.phi(), G.beta(), "phi"));
  rep.checks.push_back(guarded("grading_closure", [&]() -> std::optional<std::string> {
    for (const auto& x : basis)
      for (const auto& y : basis) {
        GroupElem target = bihom_sum(G, x.degree, y.degree);
        if (!A.component(target).contains(A.star_unchecked(x.value, y.value)))
          return "x*y is not in M" + target.to_string() + " at x=" + x.label() + ", y=" + y.label();
      }
    return std::nullopt;
  }));
  rep.checks.push_back(twist_star_multiplicative(A, A.psi(), "psi"));
  rep.checks.push_back(twist_star_multiplicative(A, A.phi(), "phi"));
  rep.checks.push_back(guarded("bihom_associativity", [&]() -> std::optional<std::string> {
    const std::size_t d = basis.size();
    std::vector<std::vector<Mat>> prod(d);
    std::vector<Mat> psi_x, phi_z;
    for (std::size_t i = 0; i < d; ++i) {
      psi_x.push_back(A.psi().apply(basis[i].value));
      phi_z.push_back(A.phi().apply(basis[i].value));
      for (std::size_t j = 0; j < d; ++j) prod[i].push_back(A.star_unchecked(basis[i].value, basis[j].value));
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (!(A.star_unchecked(psi_x[i], prod[j][k]) == A.star_unchecked(prod[i][j], phi_z[k])))
            return "psi(x)*(y*z) != (x*y)*phi(z) at x=" + basis[i].label() + ", y=" + basis[j].label() +
                   ", z=" + basis[k].label();
    return std::nullopt;
  }));
  return rep;
}

bool Support::contains(const GroupElem& g) const { return std::binary_search(sigma.begin(), sigma.end(), g); }

Support support(const GradedBiHomAlgebra& A) {
  Support s;
  const GroupElem zero = A.group().group().zero();
  for (const auto& [g, sub] : A.components())
    if (!(g == zero)) s.sigma.push_back(g);
  return s;
}

bool is_symmetric(const Support& S, const GroupSpec& group) {
  return std::all_of(S.sigma.begin(), S.sigma.end(), [&](const GroupElem& g) { return S.contains(group.neg(g)); });
}

std::map<GroupElem, Mat> homogeneous_decompose(const GradedBiHomAlgebra& A, const Mat& x) {
  if (A.underlying().dim() != A.total_component_dim())
    throw InvalidInput("components are not independent; decomposition is not unique");
  std::vector<Mat> mats;
  for (const auto& h : A.homogeneous_basis()) mats.push_back(h.value);
  CoordinateSystem cs(A.field(), A.n(), mats);
  auto c = cs.coordinates(x);
  if (!c) throw NotInAlgebra(x.to_string() + " is not in the underlying space");
  std::map<GroupElem, Mat> out;
  const auto& basis = A.homogeneous_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if ((*c)[i].is_zero()) continue;
    auto [it, inserted] = out.try_emplace(basis[i].degree, A.field(), A.n());
    it->second += (*c)[i] * basis[i].value;
  }
  return out;
}

bool is_graded_subspace(const GradedBiHomAlgebra& A, const Subspace& sub) {
  Subspace acc = Subspace::zero(A.field(), A.n());
  for (const auto& [g, comp] : A.components()) acc = sum(acc, intersect(sub, comp));
  return acc == sub;
}

GradedBiHomAlgebra restrict_to(const GradedBiHomAlgebra& A, const Subspace& sub) {
  std::map<GroupElem, Subspace> pieces;
  Subspace acc = Subspace::zero(A.field(), A.n());
  std::vector<Mat> domain, psi_img, phi_img;
  for (const auto& [g, comp] : A.components()) {
    Subspace piece = intersect(sub, comp);
    if (piece.is_zero()) continue;
    acc = sum(acc, piece);
    for (const auto& m : piece.basis()) {
      domain.push_back(m);
      psi_img.push_back(A.psi().apply(m));
      phi_img.push_back(A.phi().apply(m));
    }
    pieces.emplace(g, std::move(piece));
  }
  if (!(acc == sub)) throw InvalidInput("subspace is not graded: it is not the sum of its homogeneous parts");
  TwistMap psi = TwistMap::from_images(A.field(), A.n(), domain, std::move(psi_img));
  TwistMap phi = TwistMap::from_images(A.field(), A.n(), std::move(domain), std::move(phi_img));
  return GradedBiHomAlgebra(A.field(), A.n(), A.group(), std::move(pieces), std::move(psi), std::move(phi));
}

}  // namespace gbihom
