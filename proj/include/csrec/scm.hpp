#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "csrec/error.hpp"
#include "csrec/usersim.hpp"

namespace csrec {

// Discrete structural causal model: a DAG plus one conditional probability
// table per node. All inference is exact enumeration; this module exists to
// be an oracle, so it caps the state space and fails loudly instead of
// sampling.

struct NodeSpec {
  std::string name;
  int domain_size = 0;
  // One probability vector per joint parent assignment. Rows are indexed
  // row-major over the node's parent list: the LAST listed parent varies
  // fastest.
  std::vector<std::vector<double>> cpt;
};

struct Scm {
  std::vector<NodeSpec> nodes;
  std::vector<std::vector<int>> parents;  // parents[i] = indices into nodes

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].name == name) return static_cast<int>(i);
    fail(Errc::UnknownNode, "no node named '" + name + "'");
  }

  int n_nodes() const { return static_cast<int>(nodes.size()); }
};

using Assignment = std::map<std::string, int>;
using Intervention = std::map<std::string, int>;

struct DistributionTable {
  std::vector<std::string> targets;
  std::vector<int> domain_sizes;
  std::vector<double> probs;  // row-major over targets, last target fastest

  double at(const std::vector<int>& values) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < targets.size(); ++k) idx = idx * domain_sizes[k] + values[k];
    return probs[idx];
  }
};

namespace detail {

inline std::size_t cpt_rows_expected(const Scm& scm, int node) {
  std::size_t rows = 1;
  for (int p : scm.parents[node]) rows *= static_cast<std::size_t>(scm.nodes[p].domain_size);
  return rows;
}

inline std::size_t cpt_row_index(const Scm& scm, int node, const std::vector<int>& values) {
  std::size_t row = 0;
  for (int p : scm.parents[node]) row = row * scm.nodes[p].domain_size + values[p];
  return row;
}

// DFS to surface one edge of a cycle among the given candidate nodes.
inline std::string find_cycle_edge(const Scm& scm, const std::vector<bool>& in_cycle_set) {
  int n = scm.n_nodes();
  std::vector<int> color(n, 0);  // 0 white, 1 grey, 2 black
  std::string edge;
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    for (int p : scm.parents[v])
      if (in_cycle_set[v] && in_cycle_set[p]) children[p].push_back(v);

  std::function<bool(int)> dfs = [&](int v) -> bool {
    color[v] = 1;
    for (int c : children[v]) {
      if (color[c] == 1) {
        edge = scm.nodes[v].name + "->" + scm.nodes[c].name;
        return true;
      }
      if (color[c] == 0 && dfs(c)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (in_cycle_set[v] && color[v] == 0 && dfs(v)) break;
  return edge.empty() ? "unknown" : edge;
}

}  // namespace detail

// Returns the topological order on success; throws CycleDetected or BadCpt.
inline std::vector<int> validate_scm(const Scm& scm) {
  int n = scm.n_nodes();
  require(static_cast<int>(scm.parents.size()) == n, Errc::ValidationError,
          "parents list size mismatch");
  for (int v = 0; v < n; ++v) {
    require(scm.nodes[v].domain_size >= 1, Errc::ValidationError,
            "node '" + scm.nodes[v].name + "' has empty domain");
    for (int p : scm.parents[v])
      require(p >= 0 && p < n && p != v, Errc::ValidationError,
              "node '" + scm.nodes[v].name + "' has invalid parent index");
  }

  // Kahn's algorithm.
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v) {
    indeg[v] = static_cast<int>(scm.parents[v].size());
    for (int p : scm.parents[v]) children[p].push_back(v);
  }
  std::vector<int> order;
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.front();
    queue.erase(queue.begin());
    order.push_back(v);
    for (int c : children[v])
      if (--indeg[c] == 0) queue.push_back(c);
  }
  if (static_cast<int>(order.size()) != n) {
    std::vector<bool> leftover(n, false);
    for (int v = 0; v < n; ++v) leftover[v] = indeg[v] > 0;
    fail(Errc::CycleDetected, "cycle through edge " + detail::find_cycle_edge(scm, leftover));
  }

  for (int v = 0; v < n; ++v) {
    const auto& node = scm.nodes[v];
    std::size_t rows = detail::cpt_rows_expected(scm, v);
    require(node.cpt.size() == rows, Errc::BadCpt,
            "node '" + node.name + "': expected " + std::to_string(rows) + " CPT rows, got " +
                std::to_string(node.cpt.size()));
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& row = node.cpt[r];
      require(static_cast<int>(row.size()) == node.domain_size, Errc::BadCpt,
              "node '" + node.name + "' row " + std::to_string(r) + ": wrong width");
      double sum = 0.0;
      for (double x : row) {
        require(x >= -1e-12 && x <= 1.0 + 1e-12, Errc::BadCpt,
                "node '" + node.name + "' row " + std::to_string(r) + ": entry out of [0,1]");
        sum += x;
      }
      require(std::fabs(sum - 1.0) <= 1e-12, Errc::BadCpt,
              "node '" + node.name + "' row " + std::to_string(r) + ": sum " + std::to_string(sum));
    }
  }
  return order;
}

// Product of CPT entries; `a` must assign every node.
inline double joint_probability(const Scm& scm, const Assignment& a) {
  int n = scm.n_nodes();
  std::vector<int> values(n, -1);
  for (const auto& [name, val] : a) {
    int idx = scm.index_of(name);
    require(val >= 0 && val < scm.nodes[idx].domain_size, Errc::ValidationError,
            "assignment value out of domain for '" + name + "'");
    values[idx] = val;
  }
  for (int v = 0; v < n; ++v)
    require(values[v] >= 0, Errc::IncompleteAssignment,
            "node '" + scm.nodes[v].name + "' unassigned");
  double prob = 1.0;
  for (int v = 0; v < n; ++v)
    prob *= scm.nodes[v].cpt[detail::cpt_row_index(scm, v, values)][values[v]];
  return prob;
}

namespace detail {

inline void check_disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b,
                           const char* what) {
  for (const auto& x : a)
    for (const auto& y : b)
      require(x != y, Errc::DisjointnessViolation, std::string(what) + ": '" + x + "'");
}

}  // namespace detail

// Exact P(target | given, do(dos)) by truncated-factorization enumeration:
// do-nodes lose their incoming edges (their CPT factor is dropped and their
// value pinned), then all free nodes are summed out.
inline DistributionTable query(const Scm& scm, const std::vector<std::string>& target,
                               const Assignment& given, const Intervention& dos) {
  require(!target.empty(), Errc::EmptyInput, "query: empty target set");
  int n = scm.n_nodes();

  std::vector<std::string> given_names, dos_names;
  for (const auto& [k, v] : given) given_names.push_back(k);
  for (const auto& [k, v] : dos) dos_names.push_back(k);
  detail::check_disjoint(target, given_names, "target/given overlap");
  detail::check_disjoint(target, dos_names, "target/dos overlap");
  detail::check_disjoint(given_names, dos_names, "given/dos overlap");

  std::vector<int> values(n, -1);
  std::vector<bool> is_do(n, false);
  auto pin = [&](const std::string& name, int val) {
    int idx = scm.index_of(name);
    require(val >= 0 && val < scm.nodes[idx].domain_size, Errc::ValidationError,
            "value out of domain for '" + name + "'");
    values[idx] = val;
    return idx;
  };
  for (const auto& [name, val] : given) pin(name, val);
  for (const auto& [name, val] : dos) is_do[pin(name, val)] = true;

  std::vector<int> target_idx;
  std::vector<int> target_dims;
  for (const auto& name : target) {
    int idx = scm.index_of(name);
    target_idx.push_back(idx);
    target_dims.push_back(scm.nodes[idx].domain_size);
  }

  std::vector<int> free_nodes;
  double states = 1.0;
  for (int v = 0; v < n; ++v)
    if (values[v] < 0) {
      free_nodes.push_back(v);
      states *= scm.nodes[v].domain_size;
    }
  require(states <= 1e7, Errc::TooLarge,
          "enumeration would visit " + std::to_string(states) + " states");

  std::size_t cells = 1;
  for (int d : target_dims) cells *= static_cast<std::size_t>(d);
  std::vector<double> acc(cells, 0.0);
  double total = 0.0;

  for (int v : free_nodes) values[v] = 0;
  bool done = free_nodes.empty() ? false : false;
  while (true) {
    double w = 1.0;
    for (int v = 0; v < n && w > 0.0; ++v) {
      if (is_do[v]) continue;  // point mass contributes factor 1
      w *= scm.nodes[v].cpt[detail::cpt_row_index(scm, v, values)][values[v]];
    }
    if (w > 0.0) {
      std::size_t cell = 0;
      for (std::size_t k = 0; k < target_idx.size(); ++k)
        cell = cell * target_dims[k] + values[target_idx[k]];
      acc[cell] += w;
      total += w;
    }
    // odometer over free nodes
    std::size_t k = 0;
    for (; k < free_nodes.size(); ++k) {
      int v = free_nodes[k];
      if (++values[v] < scm.nodes[v].domain_size) break;
      values[v] = 0;
    }
    if (k == free_nodes.size()) {
      done = true;
      break;
    }
  }
  (void)done;

  if (total <= 0.0)
    fail(Errc::ZeroProbabilityEvidence, "conditioning event has probability zero");
  for (auto& x : acc) x /= total;

  DistributionTable table;
  table.targets = target;
  table.domain_sizes = target_dims;
  table.probs = std::move(acc);
  return table;
}

// Graph mutilation applied before a d-separation test. `x` is the do()-set
// driving the cut; Z(W) for RemoveInX_InZW is computed as the Z-nodes that
// are not ancestors of any W-node in the already-cut graph.
struct GraphCut {
  enum Kind { Plain, RemoveInX, RemoveInX_OutZ, RemoveInX_InZW };
  Kind kind = Plain;
  std::vector<std::string> x;
};

namespace detail {

inline std::vector<bool> ancestors_of(const std::vector<std::vector<int>>& parents,
                                      const std::vector<int>& seeds) {
  int n = static_cast<int>(parents.size());
  std::vector<bool> anc(n, false);
  std::vector<int> stack = seeds;
  for (int s : seeds) anc[s] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int p : parents[v])
      if (!anc[p]) {
        anc[p] = true;
        stack.push_back(p);
      }
  }
  return anc;
}

}  // namespace detail

// Reachability-based d-separation on the (optionally mutilated) graph.
// The conditioning set of the test is w plus the cut's x set, matching the
// do-calculus preconditions (Y indep Z | X, W). Pure graph test; no CPTs.
inline bool d_separated(const Scm& scm, const std::vector<std::string>& y,
                        const std::vector<std::string>& z, const std::vector<std::string>& w,
                        const GraphCut& cut = {}) {
  int n = scm.n_nodes();
  auto to_indices = [&](const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const auto& name : names) out.push_back(scm.index_of(name));
    return out;
  };
  std::vector<int> yi = to_indices(y), zi = to_indices(z), wi = to_indices(w),
                   xi = to_indices(cut.x);
  detail::check_disjoint(y, z, "Y/Z overlap");
  detail::check_disjoint(y, w, "Y/W overlap");
  detail::check_disjoint(z, w, "Z/W overlap");

  std::vector<std::vector<int>> parents = scm.parents;
  if (cut.kind != GraphCut::Plain)
    for (int v : xi) parents[v].clear();
  if (cut.kind == GraphCut::RemoveInX_OutZ) {
    std::vector<bool> in_z(n, false);
    for (int v : zi) in_z[v] = true;
    for (auto& ps : parents)
      ps.erase(std::remove_if(ps.begin(), ps.end(), [&](int p) { return in_z[p]; }), ps.end());
  } else if (cut.kind == GraphCut::RemoveInX_InZW) {
    std::vector<bool> anc_w = detail::ancestors_of(parents, wi);
    for (int v : zi) {
      bool is_w_ancestor = anc_w[v];
      bool is_w = std::find(wi.begin(), wi.end(), v) != wi.end();
      if (!is_w_ancestor || is_w) {
        // Z-node that is not an ancestor of any W-node: cut its in-edges.
        // (ancestors_of marks W itself; a W-node can't be in Z by disjointness)
        if (!anc_w[v] || is_w) parents[v].clear();
      }
    }
  }

  std::vector<bool> cond(n, false);
  std::vector<int> cond_seeds;
  for (int v : wi) cond[v] = true;
  for (int v : xi) cond[v] = true;
  for (int v = 0; v < n; ++v)
    if (cond[v]) cond_seeds.push_back(v);

  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    for (int p : parents[v]) children[p].push_back(v);

  // A = conditioning set plus its ancestors (collider activation test).
  std::vector<bool> active_collider =
      cond_seeds.empty() ? std::vector<bool>(n, false) : detail::ancestors_of(parents, cond_seeds);

  std::vector<bool> in_z(n, false);
  for (int v : zi) in_z[v] = true;

  // (node, direction): direction 0 = trail arrived from a child ("up"),
  // 1 = arrived from a parent ("down").
  std::vector<std::array<bool, 2>> visited(n, {false, false});
  std::vector<std::pair<int, int>> stack;
  for (int v : yi) stack.push_back({v, 0});
  while (!stack.empty()) {
    auto [v, dir] = stack.back();
    stack.pop_back();
    if (visited[v][dir]) continue;
    visited[v][dir] = true;
    if (in_z[v] && !cond[v]) return false;  // reached Z: active trail exists
    if (dir == 0) {
      if (!cond[v]) {
        for (int p : parents[v]) stack.push_back({p, 0});
        for (int c : children[v]) stack.push_back({c, 1});
      }
    } else {
      if (!cond[v])
        for (int c : children[v]) stack.push_back({c, 1});
      if (active_collider[v])
        for (int p : parents[v]) stack.push_back({p, 0});
    }
  }
  return true;
}

struct RuleCheckResult {
  bool applicable = false;
  double max_abs_diff = 0.0;
  int points_checked = 0;
};

namespace detail {

// Iterate all joint assignments of the named nodes.
template <typename Fn>
void for_each_assignment(const Scm& scm, const std::vector<std::string>& names, Fn&& fn) {
  std::vector<int> dims;
  for (const auto& name : names) dims.push_back(scm.nodes[scm.index_of(name)].domain_size);
  std::vector<int> vals(names.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < names.size(); ++i) a[names[i]] = vals[i];
    fn(a);
    std::size_t k = 0;
    for (; k < names.size(); ++k) {
      if (++vals[k] < dims[k]) break;
      vals[k] = 0;
    }
    if (k == names.size()) break;
  }
}

inline Assignment merge(const Assignment& a, const Assignment& b) {
  Assignment out = a;
  for (const auto& [k, v] : b) out[k] = v;
  return out;
}

inline Assignment restrict_to(const Assignment& a, const std::vector<std::string>& names) {
  Assignment out;
  for (const auto& name : names) out[name] = a.at(name);
  return out;
}

inline double max_table_diff(const DistributionTable& a, const DistributionTable& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.probs.size(); ++i)
    m = std::max(m, std::fabs(a.probs[i] - b.probs[i]));
  return m;
}

}  // namespace detail

// Numerical check of do-calculus Rules 1-3. `applicable` is the rule's
// d-separation precondition; when applicable the distribution identity is
// evaluated on every joint assignment of the conditioning variables and the
// largest |LHS - RHS| over the grid is returned. Grid points whose
// conditioning event has probability zero are skipped on both sides.
inline RuleCheckResult check_docalc_rule(const Scm& scm, int rule,
                                         const std::vector<std::string>& x,
                                         const std::vector<std::string>& y,
                                         const std::vector<std::string>& z,
                                         const std::vector<std::string>& w) {
  require(rule >= 1 && rule <= 3, Errc::ValidationError, "rule must be 1, 2 or 3");
  detail::check_disjoint(x, y, "X/Y overlap");
  detail::check_disjoint(x, z, "X/Z overlap");
  detail::check_disjoint(x, w, "X/W overlap");
  detail::check_disjoint(y, z, "Y/Z overlap");
  detail::check_disjoint(y, w, "Y/W overlap");
  detail::check_disjoint(z, w, "Z/W overlap");

  RuleCheckResult result;
  GraphCut cut;
  cut.x = x;
  cut.kind = rule == 1   ? GraphCut::RemoveInX
             : rule == 2 ? GraphCut::RemoveInX_OutZ
                         : GraphCut::RemoveInX_InZW;
  result.applicable = d_separated(scm, y, z, w, cut);

  std::vector<std::string> grid_names = x;
  grid_names.insert(grid_names.end(), z.begin(), z.end());
  grid_names.insert(grid_names.end(), w.begin(), w.end());

  detail::for_each_assignment(scm, grid_names, [&](const Assignment& a) {
    Assignment ax = detail::restrict_to(a, x);
    Assignment az = detail::restrict_to(a, z);
    Assignment aw = detail::restrict_to(a, w);
    try {
      DistributionTable lhs, rhs;
      if (rule == 1) {
        lhs = query(scm, y, detail::merge(az, aw), ax);
        rhs = query(scm, y, aw, ax);
      } else if (rule == 2) {
        lhs = query(scm, y, aw, detail::merge(ax, az));
        rhs = query(scm, y, detail::merge(az, aw), ax);
      } else {
        lhs = query(scm, y, aw, detail::merge(ax, az));
        rhs = query(scm, y, aw, ax);
      }
      result.max_abs_diff = std::max(result.max_abs_diff, detail::max_table_diff(lhs, rhs));
      ++result.points_checked;
    } catch (const Error& e) {
      if (e.code() != Errc::ZeroProbabilityEvidence) throw;
    }
  });
  return result;
}

// ---------------------------------------------------------------------------
// Recommendation-graph construction: P -> S_t, P -> D_t, S_t -> D_t,
// D_{t-1} -> D_t. Offline regime: no D_t -> S_{t+1} edge. The P node indexes
// which preference profile is active; S-nodes range over the catalog and
// D-nodes are binary.
// ---------------------------------------------------------------------------

inline constexpr double kDefaultProposalKappa = 3.0;

// Normalized observational exposure row for one profile:
// q(i) proportional to popularity(i) * exp(kappa * prefs[genre(i)]).
inline std::vector<double> make_exposure_row(const UserProfile& user, const Catalog& catalog,
                                             double kappa = kDefaultProposalKappa) {
  std::vector<double> q(catalog.items.size());
  double total = 0.0;
  for (std::size_t i = 0; i < catalog.items.size(); ++i) {
    q[i] = catalog.items[i].popularity * std::exp(kappa * user.prefs[catalog.items[i].genre]);
    total += q[i];
  }
  require(total > 0.0, Errc::ValidationError, "exposure weights sum to zero");
  for (auto& v : q) v /= total;
  return q;
}

inline Scm build_recsys_scm(int T, const DecisionModelParams& params,
                            const std::vector<UserProfile>& users, const Catalog& catalog,
                            const std::vector<std::vector<double>>& exposure_cpts = {},
                            const std::vector<double>& p_prior = {}) {
  require(T >= 1, Errc::ValidationError, "T must be >= 1");
  require(!users.empty(), Errc::ValidationError, "need at least one profile");
  require(params.w_r == 0.0, Errc::NonMarkovConfig,
          "w_r must be 0 so D_t depends only on (S_t, D_{t-1}, P)");
  int n_items = static_cast<int>(catalog.items.size());
  require(n_items >= 1, Errc::ValidationError, "empty catalog");

  double states = static_cast<double>(users.size());
  for (int t = 0; t < T; ++t) states *= 2.0 * n_items;
  require(states <= 1e7, Errc::TooLarge,
          "joint state space " + std::to_string(states) + " exceeds 1e7");

  std::vector<std::vector<double>> exposure = exposure_cpts;
  if (exposure.empty())
    for (const auto& u : users) exposure.push_back(make_exposure_row(u, catalog));
  require(exposure.size() == users.size(), Errc::ValidationError,
          "need one exposure row per profile");

  std::vector<double> prior = p_prior;
  if (prior.empty()) prior.assign(users.size(), 1.0 / static_cast<double>(users.size()));

  Scm scm;
  scm.nodes.push_back({"P", static_cast<int>(users.size()), {prior}});
  scm.parents.push_back({});

  int p_node = 0;
  int prev_d = -1;
  for (int t = 1; t <= T; ++t) {
    // S_t | P
    NodeSpec s_node;
    s_node.name = "S" + std::to_string(t);
    s_node.domain_size = n_items;
    for (std::size_t p = 0; p < users.size(); ++p) s_node.cpt.push_back(exposure[p]);
    scm.nodes.push_back(std::move(s_node));
    scm.parents.push_back({p_node});
    int s_idx = scm.n_nodes() - 1;

    // D_t | P, S_t (, D_{t-1})
    NodeSpec d_node;
    d_node.name = "D" + std::to_string(t);
    d_node.domain_size = 2;
    if (t == 1) {
      for (std::size_t p = 0; p < users.size(); ++p)
        for (int i = 0; i < n_items; ++i) {
          double q = decision_prob(users[p], params, catalog, i, kNoPrevDecision, {});
          d_node.cpt.push_back({1.0 - q, q});
        }
      scm.nodes.push_back(std::move(d_node));
      scm.parents.push_back({p_node, s_idx});
    } else {
      for (std::size_t p = 0; p < users.size(); ++p)
        for (int i = 0; i < n_items; ++i)
          for (int d = 0; d < 2; ++d) {
            double q = decision_prob(users[p], params, catalog, i, d, {});
            d_node.cpt.push_back({1.0 - q, q});
          }
      scm.nodes.push_back(std::move(d_node));
      scm.parents.push_back({p_node, s_idx, prev_d});
    }
    prev_d = scm.n_nodes() - 1;
  }
  return scm;
}

inline Scm build_recsys_scm(int T, const DecisionModelParams& params, const UserProfile& user,
                            const Catalog& catalog,
                            const std::vector<std::vector<double>>& exposure_cpts = {}) {
  return build_recsys_scm(T, params, std::vector<UserProfile>{user}, catalog, exposure_cpts);
}

// Max over decision values of |LHS - RHS| for the interventional recursion:
// LHS  = P(D_t | do(S_t..S_1), P)
// RHS  = sum_d P(D_t | S_t, D_{t-1}=d, P) * P(D_{t-1}=d | do(S_{t-1}..S_1), P)
// with the observational factor taken on the un-mutilated graph. At t = 1 the
// sum degenerates to the direct conditional P(D_1 | S_1, P).
inline double verify_theorem1(const Scm& scm, int t, const std::vector<int>& s_values,
                              int p_value) {
  require(t >= 1, Errc::ValidationError, "t must be >= 1");
  require(static_cast<int>(s_values.size()) >= t, Errc::ValidationError,
          "need a recommendation for every step up to t");

  auto s_name = [](int k) { return "S" + std::to_string(k); };
  auto d_name = [](int k) { return "D" + std::to_string(k); };

  Intervention dos_t;
  for (int k = 1; k <= t; ++k) dos_t[s_name(k)] = s_values[k - 1];
  DistributionTable lhs = query(scm, {d_name(t)}, {{"P", p_value}}, dos_t);

  std::vector<double> rhs(2, 0.0);
  if (t == 1) {
    DistributionTable base =
        query(scm, {d_name(1)}, {{s_name(1), s_values[0]}, {"P", p_value}}, {});
    rhs = base.probs;
  } else {
    Intervention dos_prev;
    for (int k = 1; k <= t - 1; ++k) dos_prev[s_name(k)] = s_values[k - 1];
    DistributionTable prev = query(scm, {d_name(t - 1)}, {{"P", p_value}}, dos_prev);
    for (int d = 0; d < 2; ++d) {
      DistributionTable obs = query(
          scm, {d_name(t)},
          {{s_name(t), s_values[t - 1]}, {d_name(t - 1), d}, {"P", p_value}}, {});
      for (int dt = 0; dt < 2; ++dt) rhs[dt] += obs.probs[dt] * prev.probs[d];
    }
  }

  double diff = 0.0;
  for (int dt = 0; dt < 2; ++dt) diff = std::max(diff, std::fabs(lhs.probs[dt] - rhs[dt]));
  return diff;
}

}  // namespace csrec
