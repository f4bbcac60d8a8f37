#include "tglab/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "tglab/gf2.hpp"

namespace tglab {

namespace {

void check_basis_order(const TimeGraph& g, std::span<const Permutation> basis) {
  for (const Permutation& p : basis) {
    if (p.size() != g.order()) throw std::invalid_argument("basis permutation order does not match graph");
  }
}

void append_pair_rows(const TimeGraph& g, std::span<const Permutation> basis, LinearSystem& sys) {
  const std::size_t m = edge_count(g.order());
  const std::size_t vars = basis.size();
  // containing[e] lists the basis indices whose permutation has e incident.
  std::vector<std::vector<std::size_t>> containing(m);
  std::vector<std::vector<std::size_t>> incident(vars);
  for (std::size_t k = 0; k < vars; ++k) {
    incident[k] = incident_edge_indices(basis[k]);
    for (std::size_t e : incident[k]) containing[e].push_back(k);
  }

  std::unordered_set<BitVec, BitVecHash> seen;
  std::vector<BitVec> row_for(m);
  std::vector<bool> touched(m, false);
  for (std::size_t e : g.complement_indices()) {
    sys.rows_before_dedup += m;
    // Row (e, e') has bit k iff both e and e' are incident on basis[k].
    std::vector<std::size_t> order;
    for (std::size_t k : containing[e]) {
      for (std::size_t ep : incident[k]) {
        if (!touched[ep]) {
          touched[ep] = true;
          row_for[ep] = BitVec(vars);
          order.push_back(ep);
        }
        row_for[ep].set(k);
      }
    }
    std::sort(order.begin(), order.end());
    for (std::size_t ep : order) {
      touched[ep] = false;
      if (seen.insert(row_for[ep]).second) {
        sys.rows.push_back(SystemRow{std::move(row_for[ep]), false, RowKind::kPairConstraint, e, ep});
      }
    }
  }
}

}  // namespace

LinearSystem assemble_support_constraints(const TimeGraph& g, std::span<const Permutation> basis) {
  check_basis_order(g, basis);
  LinearSystem sys;
  sys.variables = basis.size();
  append_pair_rows(g, basis, sys);
  return sys;
}

LinearSystem assemble_system(const TimeGraph& g, std::span<const Permutation> basis) {
  check_basis_order(g, basis);
  LinearSystem sys;
  sys.variables = basis.size();
  BitVec ones(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) ones.set(k);
  sys.rows.push_back(SystemRow{std::move(ones), true, RowKind::kValue, 0, 0});
  sys.rows_before_dedup = 1;
  append_pair_rows(g, basis, sys);
  return sys;
}

Decision solve_system(const LinearSystem& system) {
  std::vector<BitVec> equations;
  BitVec rhs(system.rows.size());
  equations.reserve(system.rows.size());
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    equations.push_back(system.rows[r].coeffs);
    rhs.assign(r, system.rows[r].rhs);
  }
  Decision d;
  d.basis_size = system.variables;
  d.rows = system.rows.size();
  const auto solution = gf2::solve(equations, rhs, system.variables);
  if (solution) {
    d.answer = true;
    d.rank = solution->rank;
    d.witness = solution->particular;
  } else {
    d.rank = gf2::rank(equations);
  }
  return d;
}

bool satisfies(const LinearSystem& system, const BitVec& x) {
  for (const SystemRow& row : system.rows) {
    if (row.coeffs.dot(x) != row.rhs) return false;
  }
  return true;
}

PairVector combine(std::span<const Permutation> basis, const BitVec& x, int n) {
  PairVector g(n);
  for (std::size_t k : x.set_bits()) g ^= tpn(basis[k]);
  return g;
}

Decision decide_time_graph(const TimeGraph& g, std::span<const Permutation> basis) {
  return solve_system(assemble_system(g, basis));
}

Decision algorithm2(const Graph& g, const BasisOptions& options) {
  const TimeGraph tg = reduce_hamp(g);
  const auto basis = algorithm1(g.order(), options);
  return decide_time_graph(tg, basis);
}

nlohmann::json to_json(const Decision& d, int n) {
  nlohmann::json out{{"n", n},
                     {"N", d.basis_size},
                     {"rows", d.rows},
                     {"rank", d.rank},
                     {"answer", d.answer ? "yes" : "no"}};
  if (d.witness) out["witness"] = d.witness->set_bits();
  return out;
}

}  // namespace tglab
