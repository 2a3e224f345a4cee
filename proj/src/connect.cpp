#include "gbihom/connect.hpp"

#include <algorithm>
#include <numeric>

#include "gbihom/error.hpp"

namespace gbihom {

namespace {

void check_preconditions(const GradedBiHomAlgebra& A, const Support& S, const GroupElem& g, const GroupElem& gp) {
  if (!S.contains(g)) throw NotInSupport(g.to_string());
  if (!S.contains(gp)) throw NotInSupport(gp.to_string());
  if (!is_symmetric(S, A.group().group())) {
    for (const auto& h : S.sigma)
      if (!S.contains(A.group().group().neg(h)))
        throw AsymmetricSupport(h.to_string() + " is in the support but its negative is not");
  }
}

GroupElem apply_powers(const BiHomGroup& G, const GroupElem& g, std::uint64_t i, std::uint64_t j) {
  return G.alpha().power(G.beta().power(g, j), i);
}

struct Node {
  std::size_t state;   // group index of the current partial sum
  std::size_t parent;  // node index, or npos for a start node
  std::size_t label;   // group index of the chain element appended
};

std::optional<ConnectionWitness> search(const GradedBiHomAlgebra& A, const Support& S, const GroupElem& g,
                                        const GroupElem& gp, const std::vector<OrbitPoint>& starts) {
  const BiHomGroup& G = A.group();
  const GroupSpec& grp = G.group();
  const std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<char> in_sigma(grp.size(), 0);
  for (const auto& h : S.sigma) in_sigma[grp.index_of(h)] = 1;
  std::vector<std::optional<OrbitPoint>> target(grp.size());
  for (auto& p : orbit_points(G, gp, true)) target[grp.index_of(p.element)] = p;
  std::vector<std::optional<OrbitPoint>> entry(grp.size());
  for (const auto& p : starts) entry[grp.index_of(p.element)] = p;

  std::vector<std::size_t> sigma_idx;
  for (const auto& h : S.sigma) sigma_idx.push_back(grp.index_of(h));
  const auto& a = G.alpha().table();
  const auto& b = G.beta().table();

  std::vector<Node> nodes;
  std::vector<char> visited(grp.size(), 0);

  auto build = [&](std::size_t node, std::optional<std::size_t> last_label, std::size_t final_state) {
    std::vector<std::size_t> labels, states;
    if (last_label) labels.push_back(*last_label), states.push_back(final_state);
    for (std::size_t cur = node; cur != npos; cur = nodes[cur].parent) {
      labels.push_back(nodes[cur].label);
      states.push_back(nodes[cur].state);
    }
    std::reverse(labels.begin(), labels.end());
    std::reverse(states.begin(), states.end());
    ConnectionWitness w;
    w.from = g;
    w.to = gp;
    for (auto l : labels) w.chain.push_back(grp.element(l));
    for (std::size_t t = 1; t < states.size(); ++t) w.partial_sums.push_back(grp.element(states[t]));
    const OrbitPoint& e = *entry[labels.front()];
    w.entry_exponents = {e.alpha_exp, e.beta_exp};
    const OrbitPoint& x = *target[states.back()];
    w.exit_sign = x.sign;
    w.exit_exponents = {x.alpha_exp, x.beta_exp};
    return w;
  };

  std::vector<std::size_t> layer;
  for (const auto& p : starts) {
    std::size_t idx = grp.index_of(p.element);
    if (!in_sigma[idx] || visited[idx]) continue;
    visited[idx] = 1;
    nodes.push_back({idx, npos, idx});
    layer.push_back(nodes.size() - 1);
  }
  for (auto node : layer)
    if (target[nodes[node].state]) return build(node, std::nullopt, 0);

  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (auto node : layer) {
      const std::size_t s = nodes[node].state;
      for (auto h : sigma_idx) {
        std::size_t t = grp.index_of(grp.add(grp.element(a[s]), grp.element(b[h])));
        if (target[t]) return build(node, h, t);
        if (!in_sigma[t] || visited[t]) continue;
        visited[t] = 1;
        nodes.push_back({t, node, h});
        next.push_back(nodes.size() - 1);
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<ConnectionWitness> connected(const GradedBiHomAlgebra& A, const GroupElem& g, const GroupElem& gp) {
  Support S = support(A);
  check_preconditions(A, S, g, gp);
  return search(A, S, g, gp, orbit_points(A.group(), g, false));
}

std::optional<ConnectionWitness> connected_with_entry(const GradedBiHomAlgebra& A, const GroupElem& g,
                                                      const GroupElem& gp, const GroupElem& entry) {
  Support S = support(A);
  check_preconditions(A, S, g, gp);
  for (const auto& p : orbit_points(A.group(), g, false))
    if (p.element == entry) return search(A, S, g, gp, {p});
  throw InvalidInput(entry.to_string() + " is not in the orbit of " + g.to_string());
}

std::vector<WitnessViolation> verify_witness(const GradedBiHomAlgebra& A, const GroupElem& g, const GroupElem& gp,
                                             const ConnectionWitness& w) {
  std::vector<WitnessViolation> out;
  const BiHomGroup& G = A.group();
  const GroupSpec& grp = G.group();
  Support S = support(A);
  const std::size_t k = w.chain.size();
  if (k == 0) {
    out.push_back({"chain", "empty chain"});
    return out;
  }
  for (std::size_t t = 0; t < k; ++t)
    if (!grp.contains(w.chain[t]) || !S.contains(w.chain[t]))
      out.push_back({"chain", "g_" + std::to_string(t + 1) + " = " + w.chain[t].to_string() + " is not in the support"});
  if (!out.empty()) return out;

  GroupElem first = apply_powers(G, g, w.entry_exponents.first, w.entry_exponents.second);
  if (!(w.chain[0] == first))
    out.push_back({"condition1", "g_1 = " + w.chain[0].to_string() + " but alpha^" +
                                     std::to_string(w.entry_exponents.first) + " beta^" +
                                     std::to_string(w.entry_exponents.second) + "(g) = " + first.to_string()});

  // Closed form: sum_{u=1..t} alpha^{t-u} beta^{[u>1]} (g_u).
  auto iterated = [&](std::size_t t) {
    GroupElem acc = grp.zero();
    for (std::size_t u = 1; u <= t; ++u)
      acc = grp.add(acc, apply_powers(G, w.chain[u - 1], t - u, u > 1 ? 1 : 0));
    return acc;
  };

  if (w.partial_sums.size() + 1 != k) {
    out.push_back({"partial_sums", "expected " + std::to_string(k - 1) + " partial sums, got " +
                                       std::to_string(w.partial_sums.size())});
  } else {
    for (std::size_t t = 2; t <= k; ++t) {
      GroupElem s = iterated(t);
      if (!(s == w.partial_sums[t - 2]))
        out.push_back({"partial_sums", "s_" + std::to_string(t) + " recorded as " + w.partial_sums[t - 2].to_string() +
                                           " but equals " + s.to_string()});
    }
  }
  for (std::size_t t = 2; t < k; ++t) {
    GroupElem s = iterated(t);
    if (!S.contains(s))
      out.push_back({"condition2", "s_" + std::to_string(t) + " = " + s.to_string() + " is not in the support"});
  }
  GroupElem total = iterated(k);
  GroupElem expect = apply_powers(G, gp, w.exit_exponents.first, w.exit_exponents.second);
  if (w.exit_sign == -1) expect = grp.neg(expect);
  if (w.exit_sign != 1 && w.exit_sign != -1) {
    out.push_back({"condition3", "sign must be +1 or -1"});
  } else if (!(total == expect)) {
    out.push_back({"condition3", std::string(k == 1 ? "g_1" : "total sum") + " = " + total.to_string() + " but " +
                                     (w.exit_sign < 0 ? "-" : "+") + "alpha^" +
                                     std::to_string(w.exit_exponents.first) + " beta^" +
                                     std::to_string(w.exit_exponents.second) + "(g') = " + expect.to_string()});
  }
  return out;
}

ConnectionMatrix connection_matrix(const GradedBiHomAlgebra& A) {
  ConnectionMatrix m;
  m.sigma = support(A).sigma;
  const std::size_t s = m.sigma.size();
  m.witness.assign(s, std::vector<std::optional<ConnectionWitness>>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m.witness[i][j] = connected(A, m.sigma[i], m.sigma[j]);
  return m;
}

EquivalenceCheck check_equivalence(const ConnectionMatrix& m) {
  EquivalenceCheck c;
  const std::size_t s = m.sigma.size();
  auto name = [&](std::size_t i) { return m.sigma[i].to_string(); };
  for (std::size_t i = 0; i < s; ++i)
    if (!m.related(i, i) && c.reflexive) {
      c.reflexive = false;
      if (c.witness.empty()) c.witness = name(i) + " is not connected to itself";
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (m.related(i, j) && !m.related(j, i) && c.symmetric) {
        c.symmetric = false;
        if (c.witness.empty()) c.witness = name(i) + " ~ " + name(j) + " but not conversely";
      }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < s; ++k)
        if (m.related(i, j) && m.related(j, k) && !m.related(i, k) && c.transitive) {
          c.transitive = false;
          if (c.witness.empty()) c.witness = name(i) + " ~ " + name(j) + " ~ " + name(k) + " but not " + name(i) + " ~ " + name(k);
        }
  return c;
}

std::size_t ClassPartition::class_of(const GroupElem& g) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::binary_search(classes[c].begin(), classes[c].end(), g)) return c;
  throw NotInSupport(g.to_string());
}

ClassPartition classes(const ConnectionMatrix& m) {
  const std::size_t s = m.sigma.size();
  std::vector<std::size_t> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (m.related(i, j)) {
        std::size_t ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
  ClassPartition p;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t r = find(i);
    auto [it, fresh] = slot.emplace(r, p.classes.size());
    if (fresh) p.classes.emplace_back();
    p.classes[it->second].push_back(m.sigma[i]);
  }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (find(i) != find(j)) continue;
      if (!m.related(i, j))
        throw TheoremViolation(m.sigma[i].to_string() + " and " + m.sigma[j].to_string() +
                               " share a class without a direct connection");
      p.witness_table.emplace(std::make_pair(m.sigma[i], m.sigma[j]), *m.witness[i][j]);
    }
  return p;
}

ClassPartition classes(const GradedBiHomAlgebra& A) { return classes(connection_matrix(A)); }

namespace oracle {

bool brute_force_connected(const GradedBiHomAlgebra& A, const GroupElem& g, const GroupElem& gp,
                           std::optional<std::size_t> max_length) {
  const BiHomGroup& G = A.group();
  const GroupSpec& grp = G.group();
  Support S = support(A);
  check_preconditions(A, S, g, gp);
  const std::size_t limit = max_length.value_or(S.size() + 1);
  std::vector<GroupElem> targets = orbit(G, gp, true);
  auto is_target = [&](const GroupElem& x) { return std::binary_search(targets.begin(), targets.end(), x); };

  std::vector<GroupElem> chain;
  // Total sum of the current chain from scratch.
  auto total = [&]() {
    const std::size_t t = chain.size();
    GroupElem acc = grp.zero();
    for (std::size_t u = 1; u <= t; ++u) {
      GroupElem term = chain[u - 1];
      if (u > 1) term = G.beta().apply(term);
      for (std::size_t e = 0; e < t - u; ++e) term = G.alpha().apply(term);
      acc = grp.add(acc, term);
    }
    return acc;
  };
  std::function<bool()> extend = [&]() -> bool {
    GroupElem s = total();
    if (is_target(s)) return true;
    if (chain.size() >= limit || !S.contains(s)) return false;
    for (const auto& h : S.sigma) {
      chain.push_back(h);
      bool ok = extend();
      chain.pop_back();
      if (ok) return true;
    }
    return false;
  };
  for (const auto& start : orbit(G, g, false)) {
    if (!S.contains(start)) continue;
    chain.assign(1, start);
    if (extend()) return true;
  }
  return false;
}

}  // namespace oracle

}  // namespace gbihom
