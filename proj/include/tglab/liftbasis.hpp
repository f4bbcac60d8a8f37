#ifndef TGLAB_LIFTBASIS_HPP
#define TGLAB_LIFTBASIS_HPP

#include <filesystem>
#include <optional>
#include <vector>

#include "json.hpp"
#include "tglab/timegraph.hpp"

namespace tglab {

/// Default largest order for which algorithm1 materializes pair vectors.
inline constexpr int kDefaultBasisCap = 6;

/// Environment variable naming the on-disk basis cache directory.
inline constexpr const char* kCacheDirEnv = "TGLAB_CACHE_DIR";

/// Relabeling {1..n-1} -> {1..n} \ {anchor}, with the induced embeddings
/// S_{n-1} -> S_n^anchor (permutations starting at the anchor) and
/// E(n-1) -> E(n, anchor) (edges in layers >= 2 avoiding the anchor).
class Lift {
 public:
  /// p(j) = j for j < anchor, j + 1 otherwise.
  static Lift canonical(int n, int anchor);
  /// table[j - 1] = p(j); must be injective and omit the anchor.
  Lift(int n, int anchor, std::vector<int> table);

  int order() const { return n_; }
  int anchor() const { return anchor_; }
  int operator()(int j) const { return table_[static_cast<std::size_t>(j - 1)]; }
  int inverse(int v) const;

 private:
  int n_;
  int anchor_;
  std::vector<int> table_;
  std::vector<int> inverse_;  // indexed by v, 0 at the anchor
};

/// q(p)(1) = anchor, q(p)(j + 1) = lift(p(j)).
Permutation q_lift(const Lift& lift, const Permutation& p);
/// Inverse of q_lift on S_n^anchor.
Permutation q_unlift(const Lift& lift, const Permutation& p);

/// r((i, j, t)) = (lift(i), lift(j), t + 1).
Edge r_lift(const Lift& lift, const Edge& e);
Edge r_unlift(const Lift& lift, const Edge& e);

/// Membership in E(n, anchor): t >= 2 and neither endpoint is the anchor.
bool in_lifted_edges(const Edge& e, int n, int anchor);

/// Maximal independent subset of {T_P^n(p) : p in S_n}, greedy in
/// lexicographic order, for n <= 3. For n = 1 the single permutation is
/// returned by convention.
std::vector<Permutation> base_basis(int n);

struct BasisOptions {
  int cap = kDefaultBasisCap;
  /// When set, per-order bases are read from and written to this directory.
  std::optional<std::filesystem::path> cache_dir;
};

/// Cache directory from the environment, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

/// Recursive basis of H_P^n made of T_P^n vectors: lift the order-(n-1)
/// basis through every anchor and keep the greedy independent subset,
/// visiting candidates in (anchor, k) order.
std::vector<Permutation> algorithm1(int n, const BasisOptions& options = {});

/// Forgets bases memoized in this process; the disk cache is untouched.
void clear_basis_memo();

/// {"n": n, "permutations": [[...], ...]}.
nlohmann::json basis_to_json(int n, const std::vector<Permutation>& perms);
std::vector<Permutation> basis_from_json(const nlohmann::json& j, int expected_n);

}  // namespace tglab

#endif  // TGLAB_LIFTBASIS_HPP
