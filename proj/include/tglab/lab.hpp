#ifndef TGLAB_LAB_HPP
#define TGLAB_LAB_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "tglab/canonical.hpp"
#include "tglab/gf2.hpp"
#include "tglab/liftbasis.hpp"
#include "tglab/permvec.hpp"
#include "tglab/solver.hpp"
#include "tglab/timegraph.hpp"

namespace tglab {

/// A proven identity failed: always an implementation bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Elements of H_P^n supported in G, as a basis over the H_P^n basis
/// permutations (`coefficients`) and as pair vectors (`vectors`).
struct SupportedSubspace {
  std::vector<BitVec> coefficients;
  std::vector<PairVector> vectors;
};

SupportedSubspace supported_subspace(const TimeGraph& g, std::span<const Permutation> hp_basis);

/// span P(supported_subspace): answers "is f = P(g') for some supported g'?".
class SupportedImage {
 public:
  SupportedImage(const TimeGraph& g, std::span<const Permutation> hp_basis);

  /// A supported g' with P(g') = f, if one exists.
  std::optional<PairVector> preimage(const EdgeVector& f) const;
  std::size_t subspace_dimension() const { return space_.vectors.size(); }
  std::size_t image_rank() const { return image_.rank(); }
  const SupportedSubspace& space() const { return space_; }

 private:
  int n_;
  SupportedSubspace space_;
  gf2::Basis image_;
  /// image_.originals()[r] = P(space_.vectors[source_[r]]).
  std::vector<std::size_t> source_;
};

enum class Verdict { kHolds, kViolated, kVacuous };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// How the second conjecture is read: only the top nonzero layer of the
/// given g, or the full descent that repeatedly strips the top layer.
enum class DescentMode { kTop, kChain };
std::string to_string(DescentMode m);
DescentMode descent_mode_from_string(const std::string& s);

/// Outcome of one conjecture check on one (G, enumeration, basis, g).
struct ConjectureReport {
  std::string id;
  int n = 0;
  int conjecture = 1;
  DescentMode mode = DescentMode::kTop;
  Verdict verdict = Verdict::kVacuous;
  std::size_t k = 0;
  std::vector<std::size_t> edges;
  std::vector<std::size_t> complement_order;
  std::uint64_t basis_seed = 0;
  PairVector g;
  /// Nonzero alpha(i, j) as (layer, position) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> alpha;
  /// Conjecture 1: every m in 1..k-1 whose strict tail sum is nonzero.
  std::vector<std::size_t> failing_m;
  /// m in 1..k with f^{(m)}(e_m) = 1.
  std::vector<std::size_t> pivot_ones;
  /// Conjecture 2: the layer examined first, and the layer with no
  /// supported preimage when violated.
  std::optional<std::size_t> top_layer;
  std::optional<std::size_t> failing_j;
  std::size_t descent_steps = 0;
  /// Free-form instance metadata (trial, graph kind, generator, ...).
  nlohmann::json meta = nlohmann::json::object();
  std::optional<double> elapsed_ms;
};

nlohmann::json to_json(const ConjectureReport& r);
ConjectureReport conjecture_report_from_json(const nlohmann::json& j);

/// Requires g supported in cb.graph(); throws std::invalid_argument
/// otherwise. Throws TheoremViolation if a proven identity fails.
ConjectureReport test_conjecture1(const CanonicalBasis& cb, const PairVector& g);
ConjectureReport test_conjecture2(const CanonicalBasis& cb, const PairVector& g,
                                  const SupportedImage& image, DescentMode mode = DescentMode::kTop);

/// Rebuilds the instance from a serialized report and reruns the check.
/// True iff the verdict and witness data reproduce exactly.
bool replay(const nlohmann::json& report, const BasisOptions& options = {});

/// Instance-wise consequence chain: for a non-hamiltonian G and a supported
/// g with value 1, some conjecture check on the instance must fail.
struct ImplicationCheck {
  bool applicable = false;
  bool holds = true;
  ConjectureReport conjecture1;
  ConjectureReport conjecture2_top;
  ConjectureReport conjecture2_chain;
};

ImplicationCheck check_nonhamiltonian_implication(const TimeGraph& g, const PairVector& supported,
                                                  std::span<const Permutation> hp_basis);

struct CampaignConfig {
  int n = 4;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// 0 runs both conjectures.
  int conjecture = 0;
  std::size_t orders = 1;
  DescentMode mode = DescentMode::kTop;
  bool timing = false;
  BasisOptions basis;
};

struct VerdictCounts {
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t vacuous = 0;
  void add(Verdict v);
  std::size_t total() const { return holds + violated + vacuous; }
};

struct CampaignSummary {
  std::size_t trials = 0;
  VerdictCounts conjecture1;
  VerdictCounts conjecture2;
  std::size_t reports = 0;
  std::size_t replay_failures = 0;
  std::size_t implication_instances = 0;
  std::size_t implication_failures = 0;
};

nlohmann::json to_json(const CampaignSummary& s, const CampaignConfig& c);

/// Writes one JSON line per report, then a summary line.
CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out);

enum class GraphSource { kExhaustive, kRandom };

struct CrossvalConfig {
  int n = 4;
  GraphSource source = GraphSource::kExhaustive;
  std::size_t count = 200;
  std::uint64_t seed = 42;
  BasisOptions basis;
};

struct CrossvalSummary {
  std::size_t graphs = 0;
  std::size_t agree_yes = 0;
  std::size_t agree_no = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  std::size_t witness_failures = 0;
  std::size_t implication_failures = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
};

CrossvalSummary crossval(const CrossvalConfig& config);

/// Re-checks one exported counterexample: the witness solves the system,
/// its combination is supported with value 1 on a non-hamiltonian graph,
/// and the embedded conjecture reports replay.
bool replay_counterexample(const nlohmann::json& entry, const BasisOptions& options = {});
nlohmann::json to_json(const CrossvalSummary& s, const CrossvalConfig& c);

struct DimensionRow {
  int n = 0;
  std::size_t edges = 0;
  std::size_t dim_hn = 0;
  std::size_t dim_hpn = 0;
  std::size_t basis_size = 0;
};

std::vector<DimensionRow> dimension_table(int min_n, int max_n, const BasisOptions& options = {});
nlohmann::json to_json(const std::vector<DimensionRow>& rows);

/// Random time-graphs for campaigns; `kind` selects the family
/// (0: reduced random graph, 1: uniform edge subset, 2: planted paths).
TimeGraph random_time_graph(int n, int kind, std::uint64_t seed);
std::string time_graph_kind_name(int kind);

}  // namespace tglab

#endif  // TGLAB_LAB_HPP
