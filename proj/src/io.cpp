#include "gbihom/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>

namespace gbihom {

namespace {

struct Cursor {
  const Json& node;
  std::string path;

  Cursor at(const std::string& key) const { return {node.at(key), path + "." + key}; }
  Cursor at(std::size_t i) const { return {node.at(i), path + "[" + std::to_string(i) + "]"}; }
  [[noreturn]] void fail(const std::string& msg) const { throw SchemaError(path, msg); }

  const Json::array_t& array() const {
    if (!node.is_array()) fail("expected an array");
    return node.get_ref<const Json::array_t&>();
  }
  std::int64_t integer() const {
    if (!node.is_number_integer()) fail("expected an integer");
    return node.get<std::int64_t>();
  }
  const std::string& string() const {
    if (!node.is_string()) fail("expected a string");
    return node.get_ref<const std::string&>();
  }
  /// Checks the object shape; unknown keys throw or warn.
  void object(const std::set<std::string>& required, const std::set<std::string>& optional,
              const LoadOptions& opts, std::vector<std::string>& warnings) const {
    if (!node.is_object()) fail("expected an object");
    for (const auto& k : required)
      if (!node.contains(k)) throw SchemaError(path + "." + k, "missing required key");
    for (const auto& [k, v] : node.items()) {
      if (required.count(k) || optional.count(k)) continue;
      if (!opts.lenient) at(k).fail("unknown key");
      warnings.push_back("ignoring unknown key " + path + "." + k);
    }
  }
};

FieldSpec read_field(const Cursor& root) {
  const std::string& kind = root.at("field").string();
  if (kind == "Q") {
    if (root.node.contains("p")) root.at("p").fail("Q takes no modulus");
    return FieldSpec::rationals();
  }
  if (kind != "Fp") root.at("field").fail("expected \"Q\" or \"Fp\"");
  if (!root.node.contains("p")) throw SchemaError(root.path + ".p", "missing key required by field Fp");
  std::int64_t p = root.at("p").integer();
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) root.at("p").fail("modulus must be a prime");
  return FieldSpec::prime(static_cast<std::uint64_t>(p));
}

Scalar read_scalar(const Cursor& c, const FieldSpec& f) {
  if (c.node.is_number_integer()) return Scalar(f, c.node.get<long>());
  if (!c.node.is_string()) c.fail("expected a scalar (integer or string such as \"2/3\")");
  try {
    return Scalar::parse(f, c.node.get<std::string>());
  } catch (const Error& e) {
    c.fail(e.what());
  }
}

Mat read_matrix(const Cursor& c, const FieldSpec& f, std::size_t n) {
  const auto& rows = c.array();
  if (rows.size() != n) c.fail("expected " + std::to_string(n) + " rows");
  Mat m(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    Cursor row = c.at(i);
    if (row.array().size() != n) row.fail("expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = read_scalar(row.at(j), f);
  }
  return m;
}

std::vector<std::vector<std::int64_t>> read_int_matrix(const Cursor& c, std::size_t k) {
  const auto& rows = c.array();
  if (rows.size() != k) c.fail("expected " + std::to_string(k) + " rows");
  std::vector<std::vector<std::int64_t>> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    Cursor row = c.at(i);
    if (row.array().size() != k) row.fail("expected " + std::to_string(k) + " entries");
    for (std::size_t j = 0; j < k; ++j) out[i].push_back(row.at(j).integer());
  }
  return out;
}

GroupElem read_degree(const Cursor& c, const GroupSpec& g) {
  const auto& xs = c.array();
  if (xs.size() != g.rank()) c.fail("expected " + std::to_string(g.rank()) + " coordinates");
  GroupElem e;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::int64_t v = c.at(i).integer();
    if (v < 0 || v >= g.orders()[i]) c.at(i).fail("coordinate out of range [0, " + std::to_string(g.orders()[i]) + ")");
    e.coords.push_back(v);
  }
  return e;
}

TwistMap read_twist(const Cursor& c, const FieldSpec& f, std::size_t n, const std::vector<Mat>& domain,
                    const LoadOptions& opts, std::vector<std::string>& warnings) {
  if (!c.node.is_object()) c.fail("expected an object");
  int forms = c.node.contains("identity") + c.node.contains("conjugator") + c.node.contains("images");
  if (forms != 1) c.fail("expected exactly one of 'identity', 'conjugator', 'images'");
  if (c.node.contains("identity")) {
    c.object({"identity"}, {}, opts, warnings);
    if (!c.at("identity").node.is_boolean() || !c.at("identity").node.get<bool>())
      c.at("identity").fail("expected true");
    return TwistMap::identity(f, n);
  }
  if (c.node.contains("conjugator")) {
    c.object({"conjugator"}, {}, opts, warnings);
    return TwistMap::conjugation(read_matrix(c.at("conjugator"), f, n));
  }
  c.object({"images"}, {}, opts, warnings);
  Cursor imgs = c.at("images");
  if (imgs.array().size() != domain.size())
    imgs.fail("expected one image per basis matrix (" + std::to_string(domain.size()) + ")");
  std::vector<Mat> out;
  for (std::size_t i = 0; i < domain.size(); ++i) out.push_back(read_matrix(imgs.at(i), f, n));
  return TwistMap::from_images(f, n, domain, std::move(out));
}

}  // namespace

LoadedDocument algebra_from_json(const Json& doc, const LoadOptions& opts) {
  LoadedDocument out;
  auto& w = out.warnings;
  Cursor root{doc, "$"};
  root.object({"schema_version", "field", "n", "group", "components", "psi", "phi"}, {"p", "alpha", "beta", "name"},
              opts, w);
  if (root.at("schema_version").string() != kSchemaVersion)
    root.at("schema_version").fail(std::string("unsupported version, expected \"") + kSchemaVersion + "\"");
  FieldSpec f = read_field(root);
  std::int64_t n = root.at("n").integer();
  if (n < 1) root.at("n").fail("must be positive");
  const auto dim = static_cast<std::size_t>(n);

  Cursor gc = root.at("group");
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < gc.array().size(); ++i) {
    std::int64_t m = gc.at(i).integer();
    if (m < 1) gc.at(i).fail("order must be positive");
    orders.push_back(m);
  }
  GroupSpec group(orders);
  auto automorphism = [&](const char* key) {
    if (!doc.contains(key)) return GroupAuto::identity(group);
    return GroupAuto(group, read_int_matrix(root.at(key), group.rank()));
  };
  GroupAuto alpha = automorphism("alpha");
  GroupAuto beta = automorphism("beta");

  std::map<GroupElem, Subspace> comps;
  std::vector<Mat> domain;
  Cursor cc = root.at("components");
  for (std::size_t i = 0; i < cc.array().size(); ++i) {
    Cursor item = cc.at(i);
    item.object({"degree", "basis"}, {}, opts, w);
    GroupElem g = read_degree(item.at("degree"), group);
    if (comps.count(g)) item.at("degree").fail("degree " + g.to_string() + " listed twice");
    Cursor bc = item.at("basis");
    std::vector<Mat> basis;
    for (std::size_t j = 0; j < bc.array().size(); ++j) basis.push_back(read_matrix(bc.at(j), f, dim));
    Subspace s = Subspace::span(f, dim, basis);
    if (s.dim() != basis.size()) bc.fail("basis matrices are linearly dependent");
    domain.insert(domain.end(), basis.begin(), basis.end());
    comps.emplace(std::move(g), std::move(s));
  }
  TwistMap psi = read_twist(root.at("psi"), f, dim, domain, opts, w);
  TwistMap phi = read_twist(root.at("phi"), f, dim, domain, opts, w);
  out.algebra = GradedBiHomAlgebra(f, dim, BiHomGroup(group, alpha, beta), std::move(comps), std::move(psi),
                                   std::move(phi));
  return out;
}

LoadedDocument algebra_from_text(const std::string& text, const LoadOptions& opts) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  return algebra_from_json(doc, opts);
}

Json scalar_json(const Scalar& s) { return s.to_string(); }

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json elem_json(const GroupElem& g) { return g.coords; }

Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& m : s.basis()) basis.push_back(matrix_json(m));
  return {{"dim", s.dim()}, {"basis", basis}};
}

namespace {

Json twist_json(const TwistMap& t, const GradedBiHomAlgebra& A) {
  if (t.is_conjugation()) {
    if (t.conjugator() == Mat::identity(A.field(), A.n())) return {{"identity", true}};
    return {{"conjugator", matrix_json(t.conjugator())}};
  }
  Json imgs = Json::array();
  for (const auto& h : A.homogeneous_basis()) imgs.push_back(matrix_json(t.apply(h.value)));
  return {{"images", imgs}};
}

Json verdict_json(const Verdict& v) {
  Json j{{"passed", v.passed}};
  if (!v.passed) j["witness"] = v.witness;
  return j;
}

}  // namespace

Json algebra_to_json(const GradedBiHomAlgebra& A) {
  Json comps = Json::array();
  for (const auto& [g, sub] : A.components()) {
    Json basis = Json::array();
    for (const auto& m : sub.basis()) basis.push_back(matrix_json(m));
    comps.push_back({{"degree", elem_json(g)}, {"basis", basis}});
  }
  Json doc{{"schema_version", kSchemaVersion},
          {"field", A.field().is_prime_field() ? "Fp" : "Q"},
          {"n", A.n()},
          {"group", A.group().group().orders()},
          {"alpha", A.group().alpha().matrix()},
          {"beta", A.group().beta().matrix()},
          {"components", comps},
          {"psi", twist_json(A.psi(), A)},
          {"phi", twist_json(A.phi(), A)}};
  if (A.field().is_prime_field()) doc["p"] = A.field().modulus;
  return doc;
}

Json validation_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

Json support_json(const GradedBiHomAlgebra& A) {
  Support S = support(A);
  Json sigma = Json::array();
  for (const auto& g : S.sigma) sigma.push_back(elem_json(g));
  Json dims = Json::array();
  for (const auto& [g, sub] : A.components()) dims.push_back({{"degree", elem_json(g)}, {"dim", sub.dim()}});
  return {{"sigma", sigma},
          {"symmetric", is_symmetric(S, A.group().group())},
          {"component_dims", dims},
          {"total_dim", A.underlying().dim()}};
}

Json witness_json(const ConnectionWitness& w) {
  Json chain = Json::array(), sums = Json::array();
  for (const auto& g : w.chain) chain.push_back(elem_json(g));
  for (const auto& s : w.partial_sums) sums.push_back(elem_json(s));
  return {{"from", elem_json(w.from)},
          {"to", elem_json(w.to)},
          {"chain", chain},
          {"entry_exponents", {w.entry_exponents.first, w.entry_exponents.second}},
          {"exit_sign", w.exit_sign},
          {"exit_exponents", {w.exit_exponents.first, w.exit_exponents.second}},
          {"partial_sums", sums}};
}

Json partition_json(const ClassPartition& p, const GradedBiHomAlgebra* verify_with) {
  Json cls = Json::array();
  for (const auto& c : p.classes) {
    Json members = Json::array();
    for (const auto& g : c) members.push_back(elem_json(g));
    cls.push_back(members);
  }
  Json wits = Json::array();
  for (const auto& [key, w] : p.witness_table) {
    Json j = witness_json(w);
    if (verify_with) {
      auto violations = verify_witness(*verify_with, key.first, key.second, w);
      Json vs = Json::array();
      for (const auto& v : violations) vs.push_back({{"condition", v.condition}, {"detail", v.detail}});
      j["verified"] = violations.empty();
      if (!violations.empty()) j["violations"] = vs;
    }
    wits.push_back(std::move(j));
  }
  return {{"class_count", p.classes.size()}, {"classes", cls}, {"witnesses", wits}};
}

Json decomposition_json(const DecompositionReport& r, bool with_bases) {
  Json ideals = Json::array();
  for (std::size_t i = 0; i < r.ideals.size(); ++i) {
    const auto& I = r.ideals[i];
    Json cls = Json::array();
    for (const auto& g : I.class_support) cls.push_back(elem_json(g));
    Json j{{"class", cls},
           {"dim", I.dim()},
           {"zero_part_dim", I.zero_part.dim()},
           {"zero_part_forms_agree", static_cast<bool>(r.zero_part_forms_agree[i])}};
    if (with_bases) {
      j["basis"] = subspace_json(I.total)["basis"];
      j["zero_part_basis"] = subspace_json(I.zero_part)["basis"];
    }
    ideals.push_back(std::move(j));
  }
  Json u{{"dim", r.complement_U.dim()}};
  if (with_bases) u["basis"] = subspace_json(r.complement_U)["basis"];
  Json z{{"dim", r.centre_dim}};
  if (with_bases) z["basis"] = subspace_json(r.centre)["basis"];
  return {{"ideal_count", r.ideals.size()},
          {"ideals", ideals},
          {"complement_U", u},
          {"centre", z},
          {"m0_condition", verdict_json(r.m0)},
          {"intersections_zero", verdict_json(r.intersections_zero)},
          {"orthogonality", verdict_json(r.orthogonal)},
          {"orthogonal_pairs_checked", r.orthogonal_pairs_checked},
          {"direct", r.direct},
          {"sum_is_direct", r.sum_is_direct}};
}

Json simplicity_json(const SimplicityReport& r) {
  Json j{{"sigma_multiplicative", verdict_json(r.sigma_multiplicative)},
         {"maximal_length", verdict_json(r.maximal_length)},
         {"centre_zero", verdict_json(r.centre_zero)},
         {"m0_generated", verdict_json(r.m0_generated)},
         {"all_connected", verdict_json(r.all_connected)},
         {"product_nonzero", verdict_json(r.product_nonzero)},
         {"graded_simple", to_string(r.graded_simple)}};
  if (r.oracle) {
    Json dims = Json::array();
    for (const auto& I : r.oracle->ideals) dims.push_back(I.dim());
    bool oracle_simple = r.oracle->only_trivial() && r.product_nonzero.passed;
    Json o{{"candidates", r.oracle->candidates},
           {"graded_ideal_count", r.oracle->ideals.size()},
           {"graded_ideal_dims", dims},
           {"only_trivial", r.oracle->only_trivial()}};
    if (r.graded_simple != Criterion::CriterionInapplicable)
      o["agrees_with_criterion"] = oracle_simple == (r.graded_simple == Criterion::Yes);
    j["oracle"] = o;
  } else if (!r.oracle_skipped.empty()) {
    j["oracle"] = {{"skipped", r.oracle_skipped}};
  }
  if (r.resolved) {
    j["resolved"] = *r.resolved ? "simple" : "not simple";
    j["resolved_by"] = r.resolved_by;
  } else {
    j["resolved"] = "undetermined";
  }
  return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace gbihom
