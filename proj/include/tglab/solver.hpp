#ifndef TGLAB_SOLVER_HPP
#define TGLAB_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "tglab/bitvec.hpp"
#include "tglab/liftbasis.hpp"
#include "tglab/permvec.hpp"
#include "tglab/timegraph.hpp"

namespace tglab {

enum class RowKind { kValue, kPairConstraint };

/// One equation over the basis coefficients alpha_1..alpha_N.
struct SystemRow {
  BitVec coeffs;
  bool rhs = false;
  RowKind kind = RowKind::kPairConstraint;
  /// Edge indices (e, e') for pair constraints; first occurrence after dedup.
  std::size_t e = 0;
  std::size_t e_prime = 0;
};

/// The value equation sum alpha_i = 1 followed by the homogeneous
/// equations sum g_i(e, e') alpha_i = 0 for e in G^c, e' in E(n), with
/// all-zero and duplicate rows removed.
struct LinearSystem {
  std::size_t variables = 0;
  std::vector<SystemRow> rows;
  /// 1 + |G^c| |E(n)|, the count before dropping and dedup.
  std::size_t rows_before_dedup = 0;
};

LinearSystem assemble_system(const TimeGraph& g, std::span<const Permutation> basis);

/// Only the homogeneous rows; their solution space is the set of
/// coefficient vectors whose combination is supported in g.
LinearSystem assemble_support_constraints(const TimeGraph& g, std::span<const Permutation> basis);

struct Decision {
  bool answer = false;
  /// Coefficients over the basis permutations when answer is yes.
  std::optional<BitVec> witness;
  std::size_t basis_size = 0;
  std::size_t rows = 0;
  std::size_t rank = 0;
};

Decision solve_system(const LinearSystem& system);

/// Checks every row of the system against x bit-exactly.
bool satisfies(const LinearSystem& system, const BitVec& x);

/// sum_i x_i T_P^n(basis_i).
PairVector combine(std::span<const Permutation> basis, const BitVec& x, int n);

/// Runs the decision on a time-graph with a precomputed basis.
Decision decide_time_graph(const TimeGraph& g, std::span<const Permutation> basis);

/// Full pipeline: reduce_hamp -> algorithm1 -> assemble_system -> solve.
Decision algorithm2(const Graph& g, const BasisOptions& options = {});

nlohmann::json to_json(const Decision& d, int n);

}  // namespace tglab

#endif  // TGLAB_SOLVER_HPP
