#ifndef TGLAB_CANONICAL_HPP
#define TGLAB_CANONICAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "tglab/gf2.hpp"
#include "tglab/permvec.hpp"
#include "tglab/timegraph.hpp"

namespace tglab {

/// One element of a canonical basis: f = T^n(perm), F = T_P^n(perm).
struct CanonicalElement {
  Permutation perm;
  EdgeVector f;
  PairVector F;
};

/// Layered basis of H^n with respect to a time-graph G and an enumeration
/// (e_1, ..., e_k) of its complement.
///
/// Layer 0 spans H^n(G); layers 0..l together span H^n(G_l) where
/// G_l = G + {e_1, ..., e_l}. Every permutation in layer l >= 1 has e_l
/// incident on it and is incident on G_l.
class CanonicalBasis {
 public:
  const TimeGraph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  /// Edge indices e_1..e_k; complement_order()[m - 1] is e_m.
  const std::vector<std::size_t>& complement_order() const { return order_; }
  std::size_t k() const { return order_.size(); }
  std::uint64_t basis_seed() const { return seed_; }

  const std::vector<std::vector<CanonicalElement>>& layers() const { return layers_; }
  const std::vector<CanonicalElement>& layer(std::size_t i) const { return layers_.at(i); }
  /// d(i).
  std::size_t layer_size(std::size_t i) const { return layers_.at(i).size(); }
  std::size_t size() const { return f_basis_.rank(); }

  /// Position m of an edge index in the enumeration (1-based), or 0 when
  /// the edge belongs to G.
  std::size_t position(std::size_t edge) const { return position_.at(edge); }

  /// The f(i, j) in layer-major order, with their elimination state.
  const gf2::Basis& f_basis() const { return f_basis_; }

 private:
  friend CanonicalBasis build_canonical_basis(const TimeGraph&, std::vector<std::size_t>,
                                              std::uint64_t, int);
  friend CanonicalBasis canonical_basis_from_json(const nlohmann::json&);

  CanonicalBasis(TimeGraph graph, std::vector<std::size_t> order, std::uint64_t seed);
  bool try_add(std::size_t layer, const Permutation& p);

  TimeGraph graph_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::uint64_t seed_ = 0;
  std::vector<std::vector<CanonicalElement>> layers_;
  gf2::Basis f_basis_{0};
};

/// Increasing edge index.
std::vector<std::size_t> default_complement_order(const TimeGraph& g);
/// Uniformly shuffled complement, reproducible from the seed.
std::vector<std::size_t> shuffled_complement_order(const TimeGraph& g, std::uint64_t seed);

/// The layer a permutation enters at: the largest enumeration position
/// among its incident edges outside G, or 0 if it is incident on G.
std::size_t entry_layer(const Permutation& p, const std::vector<std::size_t>& position);

/// Greedy layered construction. Within each layer candidates are visited
/// in lexicographic order when basis_seed == 0, otherwise in an order
/// shuffled by basis_seed. `order` must enumerate G^c exactly.
CanonicalBasis build_canonical_basis(const TimeGraph& g, std::vector<std::size_t> order,
                                     std::uint64_t basis_seed = 0,
                                     int cap = kDefaultPermutationCap);

/// The analogous layered basis of H_P^n built from T_P^n vectors.
struct PairLayeredBasis {
  std::vector<std::vector<Permutation>> layers;
  /// c(i).
  std::vector<std::size_t> counts;
  std::size_t rank = 0;
};

PairLayeredBasis build_canonical_pair_basis(const TimeGraph& g, const std::vector<std::size_t>& order,
                                            int cap = kDefaultPermutationCap);

/// g = gc + sum alpha(i, j) F(i, j) with P(gc) = 0.
struct Decomposition {
  /// alpha[i] has d(i) bits.
  std::vector<BitVec> alpha;
  PairVector gc;
  /// f^{(i)} = sum_j alpha(i, j) f(i, j), i = 0..k.
  std::vector<EdgeVector> layer_sums;
};

/// Requires g in H_P^n. Throws std::logic_error if P(g) is outside the
/// span of the basis or the closed-cycle remainder check fails.
Decomposition decompose(const PairVector& g, const CanonicalBasis& cb);

/// sum_{i >= m} f^{(i)}(e_m) for m = 1..k (index m - 1 in the result).
/// With strict = true the sum runs over i > m instead.
std::vector<bool> tail_sums_at_pivots(const Decomposition& dec, const CanonicalBasis& cb,
                                      bool strict);

/// True iff sum_{i >= m} f^{(i)}(e_m) = 0 for every m = 1..k. This is a
/// theorem for g supported in G; false means a bug.
bool theorem8_check(const Decomposition& dec, const CanonicalBasis& cb);

nlohmann::json to_json(const CanonicalBasis& cb);
/// Rebuilds and revalidates; throws std::invalid_argument when the stored
/// layers do not form a canonical basis for the stored graph and order.
CanonicalBasis canonical_basis_from_json(const nlohmann::json& j);

nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

}  // namespace tglab

#endif  // TGLAB_CANONICAL_HPP
