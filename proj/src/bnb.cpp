#include "dpro/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <queue>
#include <vector>

#include "dpro/errors.hpp"

namespace dpro {

namespace {

struct BoundDelta {
  int var;
  double lower;
  double upper;
};

struct Node {
  long id = 0;
  int depth = 0;
  double bound = -kInf;  // relaxation value in minimize orientation
  std::vector<BoundDelta> deltas;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;  // smaller bound first
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

class BoundScope {
 public:
  BoundScope(StandardForm& sf, const Vector& base_b) : sf_(sf), base_b_(base_b) {}
  void apply(const std::vector<BoundDelta>& deltas) {
    sf_.b_in = base_b_;
    for (const auto& d : deltas) {
      if (std::isfinite(d.lower)) sf_.set_var_lower(d.var, d.lower);
      if (std::isfinite(d.upper)) sf_.set_var_upper(d.var, d.upper);
    }
  }

 private:
  StandardForm& sf_;
  Vector base_b_;
};

double fractionality(double v) { return std::abs(v - std::round(v)); }

}  // namespace

Solution solve_mixed(const ConicProgram& program, const SolveOptions& opts,
                     const std::optional<Vector>& incumbent_hint) {
  opts.validate();
  program.validate();
  const auto t_start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (opts.time_limit_seconds <= 0) return false;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count() >
           opts.time_limit_seconds;
  };

  std::vector<int> int_vars;
  for (int j = 0; j < program.var_count(); ++j) {
    if (program.is_integer[j]) int_vars.push_back(j);
  }
  if (int_vars.empty()) return solve_continuous(program, opts);

  StandardForm sf = standardize(program);
  const Vector base_b = sf.b_in;
  BoundScope scope(sf, base_b);

  long next_id = 0;
  long processed = 0;
  long branched = 0;
  int total_iterations = 0;

  double incumbent_obj = kInf;  // minimize orientation
  Vector incumbent;
  bool have_incumbent = false;
  bool any_feasible_relaxation = false;
  bool root_unbounded = false;

  SolveOptions node_opts = opts;

  auto solve_node = [&](const std::vector<BoundDelta>& deltas) -> ContinuousResult {
    scope.apply(deltas);
    ContinuousResult r = ipm_solve(sf, node_opts);
    total_iterations += r.iterations;
    if (r.status == SolveStatus::Failed) {
      FeasibilityCheck fc = check_feasible(sf, node_opts);
      if (!fc.feasible && std::isfinite(fc.infeasibility)) {
        r.status = SolveStatus::Infeasible;
        return r;
      }
      SolveOptions retry = node_opts;
      retry.max_iterations = 2 * node_opts.max_iterations;
      retry.tolerance = 10 * node_opts.tolerance;
      r = ipm_solve(sf, retry);
      total_iterations += r.iterations;
      if (r.status == SolveStatus::Failed) {
        throw SolverError("relaxation solve failed at a branch-and-bound node");
      }
    }
    return r;
  };

  auto is_integral = [&](const Vector& u) {
    for (int j : int_vars) {
      if (fractionality(u[j]) > opts.integer_tolerance) return false;
    }
    return true;
  };

  // fix all integers to rounded values (inside node bounds) and re-solve
  auto try_rounding = [&](const Vector& u, const std::vector<BoundDelta>& deltas) {
    std::vector<BoundDelta> fixed = deltas;
    scope.apply(deltas);
    for (int j : int_vars) {
      double v = std::round(u[j]);
      v = std::clamp(v, sf.var_lower(j), sf.var_upper(j));
      fixed.push_back({j, v, v});
    }
    ContinuousResult r = solve_node(fixed);
    if (r.status == SolveStatus::Optimal && r.pobj < incumbent_obj - 1e-12) {
      incumbent_obj = r.pobj;
      incumbent = r.u;
      have_incumbent = true;
    }
  };

  // choose the branching variable: one-hot group with the largest fractional
  // mass first, then the most fractional coordinate inside it
  auto pick_branch_var = [&](const Vector& u) -> int {
    double best_mass = opts.integer_tolerance;
    int best_var = -1;
    for (const auto& group : program.one_hot_groups) {
      double mass = 0.0;
      for (int j : group) mass += fractionality(u[j]);
      if (mass > best_mass) {
        double best_frac = -1.0;
        int var = -1;
        for (int j : group) {
          const double f = fractionality(u[j]);
          if (f > opts.integer_tolerance && f > best_frac) {
            best_frac = f;
            var = j;
          }
        }
        if (var >= 0) {
          best_mass = mass;
          best_var = var;
        }
      }
    }
    if (best_var >= 0) return best_var;
    double best_frac = opts.integer_tolerance;
    for (int j : int_vars) {
      const double f = fractionality(u[j]);
      if (f > best_frac) {
        best_frac = f;
        best_var = j;
      }
    }
    return best_var;
  };

  if (incumbent_hint && incumbent_hint->size() == program.var_count()) {
    try_rounding(*incumbent_hint, {});
  }

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::deque<Node> dive;

  Node root;
  root.id = next_id++;
  {
    ContinuousResult r = solve_node(root.deltas);
    if (r.status == SolveStatus::Infeasible) {
      Solution s;
      s.status = have_incumbent ? SolveStatus::Optimal : SolveStatus::Infeasible;
      if (r.certificate) s.certificate = r.certificate;
      if (have_incumbent) {
        s.variables = incumbent;
        s.objective = sf.obj_sign * incumbent_obj;
      }
      s.nodes = 0;
      s.iterations = total_iterations;
      return s;
    }
    if (r.status == SolveStatus::Unbounded) root_unbounded = true;
    any_feasible_relaxation = r.status == SolveStatus::Optimal;
    root.bound = r.status == SolveStatus::Optimal ? r.pobj : -kInf;
    if (root_unbounded) {
      Solution s;
      s.status = SolveStatus::Unbounded;
      if (r.certificate) s.certificate = r.certificate;
      return s;
    }
    if (r.status == SolveStatus::Optimal && is_integral(r.u)) {
      Solution s;
      s.status = SolveStatus::Optimal;
      s.variables = r.u;
      s.objective = sf.obj_sign * r.pobj;
      s.nodes = 0;
      s.gap = 0.0;
      s.iterations = total_iterations;
      const int me = static_cast<int>(sf.a_eq.rows());
      s.eq_duals = Vector(me);
      for (int i = 0; i < me; ++i) s.eq_duals[i] = sf.obj_sign * r.y[i] * sf.eq_scale[i];
      s.in_duals = Vector(program.in_lhs.rows());
      for (Eigen::Index i = 0; i < program.in_lhs.rows(); ++i) {
        s.in_duals[i] = -r.y[me + i] * sf.in_scale[i];
      }
      return s;
    }
    try_rounding(r.u, root.deltas);
    dive.push_back(root);
  }

  double best_open_bound = root.bound;
  SolveStatus final_status = SolveStatus::Optimal;

  while (!dive.empty() || !open.empty()) {
    if (processed >= opts.node_limit) {
      final_status = SolveStatus::NodeLimit;
      break;
    }
    if (out_of_time()) {
      final_status = SolveStatus::TimeLimit;
      break;
    }
    Node node;
    if (!dive.empty()) {
      node = dive.back();
      dive.pop_back();
    } else {
      node = open.top();
      open.pop();
    }
    const double prune_eps = 1e-9 * (1.0 + std::abs(incumbent_obj));
    if (have_incumbent && node.bound >= incumbent_obj - prune_eps) continue;
    ++processed;

    ContinuousResult r = solve_node(node.deltas);
    if (r.status == SolveStatus::Infeasible) continue;
    if (r.status != SolveStatus::Optimal) continue;
    any_feasible_relaxation = true;
    node.bound = r.pobj;
    if (have_incumbent && node.bound >= incumbent_obj - prune_eps) continue;

    if (is_integral(r.u)) {
      if (r.pobj < incumbent_obj) {
        incumbent_obj = r.pobj;
        incumbent = r.u;
        have_incumbent = true;
      }
      continue;
    }
    if (processed % 8 == 0) try_rounding(r.u, node.deltas);

    const int var = pick_branch_var(r.u);
    if (var < 0) {
      // numerically integral after all
      if (r.pobj < incumbent_obj) {
        incumbent_obj = r.pobj;
        incumbent = r.u;
        have_incumbent = true;
      }
      continue;
    }
    ++branched;
    scope.apply(node.deltas);
    const double lo = sf.var_lower(var);
    const double hi = sf.var_upper(var);
    const double v = r.u[var];
    Node down = node;
    down.id = next_id++;
    down.depth = node.depth + 1;
    down.deltas.push_back({var, lo, std::floor(v)});
    Node up = node;
    up.id = next_id++;
    up.depth = node.depth + 1;
    up.deltas.push_back({var, std::floor(v) + 1.0, hi});
    // dive into the child that keeps more of the relaxation value
    const bool up_first = (v - std::floor(v)) > 0.5;
    dive.push_back(up_first ? down : up);
    dive.push_back(up_first ? up : down);
    while (dive.size() > 2) {
      open.push(dive.front());
      dive.pop_front();
    }
  }

  // remaining global bound
  best_open_bound = incumbent_obj;
  {
    std::priority_queue<Node, std::vector<Node>, NodeOrder> rest = open;
    double b = kInf;
    while (!rest.empty()) {
      b = std::min(b, rest.top().bound);
      rest.pop();
    }
    for (const auto& n : dive) b = std::min(b, n.bound);
    if (b < best_open_bound) best_open_bound = b;
  }

  Solution s;
  s.nodes = branched;
  s.iterations = total_iterations;
  if (!have_incumbent) {
    s.status = any_feasible_relaxation && final_status != SolveStatus::Optimal
                   ? final_status
                   : SolveStatus::Infeasible;
    return s;
  }
  s.status = final_status;
  s.variables = incumbent;
  s.objective = sf.obj_sign * incumbent_obj;
  s.gap = std::max(0.0, incumbent_obj - best_open_bound);
  const auto t_end = std::chrono::steady_clock::now();
  s.wall_seconds = std::chrono::duration<double>(t_end - t_start).count();
  return s;
}

}  // namespace dpro
