#include "tglab/lab.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "tglab/rng.hpp"

namespace tglab {

// --- Supported subspace ---

SupportedSubspace supported_subspace(const TimeGraph& g, std::span<const Permutation> hp_basis) {
  const LinearSystem sys = assemble_support_constraints(g, hp_basis);
  std::vector<BitVec> equations;
  equations.reserve(sys.rows.size());
  for (const SystemRow& row : sys.rows) equations.push_back(row.coeffs);
  const auto solution = gf2::solve(equations, BitVec(equations.size()), hp_basis.size());
  if (!solution) throw std::logic_error("supported_subspace: homogeneous system reported inconsistent");
  SupportedSubspace out;
  out.coefficients = solution->nullspace;
  for (const BitVec& c : out.coefficients) out.vectors.push_back(combine(hp_basis, c, g.order()));
  return out;
}

SupportedImage::SupportedImage(const TimeGraph& g, std::span<const Permutation> hp_basis)
    : n_(g.order()), space_(supported_subspace(g, hp_basis)), image_(edge_count(g.order())) {
  for (std::size_t r = 0; r < space_.vectors.size(); ++r) {
    if (std::holds_alternative<gf2::Extended>(image_.insert(pmap(space_.vectors[r]).bits()))) {
      source_.push_back(r);
    }
  }
}

std::optional<PairVector> SupportedImage::preimage(const EdgeVector& f) const {
  const auto coords = image_.coords(f.bits());
  if (!coords) return std::nullopt;
  PairVector out(n_);
  for (std::size_t r : coords->set_bits()) out ^= space_.vectors[source_[r]];
  return out;
}

// --- Enum names ---

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
    case Verdict::kVacuous: return "vacuous";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::kHolds;
  if (s == "violated") return Verdict::kViolated;
  if (s == "vacuous") return Verdict::kVacuous;
  throw std::invalid_argument("unknown verdict: " + s);
}

std::string to_string(DescentMode m) { return m == DescentMode::kTop ? "top" : "chain"; }

DescentMode descent_mode_from_string(const std::string& s) {
  if (s == "top") return DescentMode::kTop;
  if (s == "chain") return DescentMode::kChain;
  throw std::invalid_argument("unknown descent mode: " + s);
}

// --- Conjecture checks ---

namespace {

void require_supported(const CanonicalBasis& cb, const PairVector& g) {
  if (g.order() != cb.order()) throw std::invalid_argument("conjecture check: order mismatch");
  if (!is_supported_in(g, cb.graph())) {
    throw std::invalid_argument("conjecture check: g is not supported in G");
  }
}

Decomposition checked_decompose(const PairVector& g, const CanonicalBasis& cb) {
  Decomposition dec = decompose(g, cb);
  if (!theorem8_check(dec, cb)) {
    throw TheoremViolation("tail-sum identity at the enumeration edges failed for a supported g");
  }
  // Every layer-m element has e_m incident, so v(f^{(m)}) = f^{(m)}(e_m).
  for (std::size_t m = 1; m <= cb.k(); ++m) {
    const auto& f = dec.layer_sums[m];
    if (value(f) != f.at(cb.complement_order()[m - 1])) {
      throw TheoremViolation("layer value differs from its pivot entry at m = " + std::to_string(m));
    }
  }
  return dec;
}

ConjectureReport base_report(const CanonicalBasis& cb, const PairVector& g, const Decomposition& dec,
                             int conjecture) {
  ConjectureReport r;
  r.n = cb.order();
  r.conjecture = conjecture;
  r.k = cb.k();
  r.edges = cb.graph().edge_indices();
  r.complement_order = cb.complement_order();
  r.basis_seed = cb.basis_seed();
  r.g = g;
  for (std::size_t i = 0; i < dec.alpha.size(); ++i) {
    for (std::size_t j : dec.alpha[i].set_bits()) r.alpha.emplace_back(i, j);
  }
  for (std::size_t m = 1; m <= cb.k(); ++m) {
    if (dec.layer_sums[m].at(cb.complement_order()[m - 1])) r.pivot_ones.push_back(m);
  }
  return r;
}

std::optional<std::size_t> top_nonzero_layer(const Decomposition& dec) {
  for (std::size_t i = dec.layer_sums.size(); i-- > 0;) {
    if (dec.layer_sums[i].any()) return i;
  }
  return std::nullopt;
}

}  // namespace

ConjectureReport test_conjecture1(const CanonicalBasis& cb, const PairVector& g) {
  require_supported(cb, g);
  const Decomposition dec = checked_decompose(g, cb);
  ConjectureReport r = base_report(cb, g, dec, 1);
  if (cb.k() <= 1) {
    r.verdict = Verdict::kVacuous;
    return r;
  }
  const auto strict = tail_sums_at_pivots(dec, cb, true);
  for (std::size_t m = 1; m + 1 <= cb.k(); ++m) {
    if (strict[m - 1]) r.failing_m.push_back(m);
  }
  r.verdict = r.failing_m.empty() ? Verdict::kHolds : Verdict::kViolated;
  return r;
}

ConjectureReport test_conjecture2(const CanonicalBasis& cb, const PairVector& g,
                                  const SupportedImage& image, DescentMode mode) {
  require_supported(cb, g);
  Decomposition dec = checked_decompose(g, cb);
  ConjectureReport r = base_report(cb, g, dec, 2);
  r.mode = mode;
  auto top = top_nonzero_layer(dec);
  r.top_layer = top;
  if (!top) {
    r.verdict = Verdict::kVacuous;
    return r;
  }
  PairVector current = g;
  std::size_t j = *top;
  while (true) {
    const auto pre = image.preimage(dec.layer_sums[j]);
    if (!pre) {
      r.verdict = Verdict::kViolated;
      r.failing_j = j;
      return r;
    }
    if (mode == DescentMode::kTop || j == 0) break;
    // Strip layer j: P(current + pre) = sum_{i < j} f^{(i)}.
    current ^= *pre;
    ++r.descent_steps;
    dec = checked_decompose(current, cb);
    const auto next = top_nonzero_layer(dec);
    if (!next) break;
    if (*next >= j) throw TheoremViolation("descent did not lower the top layer");
    j = *next;
  }
  r.verdict = Verdict::kHolds;
  return r;
}

// --- Report serialization ---

nlohmann::json to_json(const ConjectureReport& r) {
  nlohmann::json alpha = nlohmann::json::array();
  for (auto [i, j] : r.alpha) alpha.push_back({i, j});
  nlohmann::json out{{"id", r.id},
                     {"n", r.n},
                     {"conjecture", r.conjecture},
                     {"verdict", to_string(r.verdict)},
                     {"k", r.k},
                     {"edges", r.edges},
                     {"complement_order", r.complement_order},
                     {"basis_seed", r.basis_seed},
                     {"g", r.g.bits().to_hex()},
                     {"alpha", std::move(alpha)},
                     {"pivot_ones", r.pivot_ones},
                     {"meta", r.meta}};
  if (r.conjecture == 1) {
    out["failing_m"] = r.failing_m;
  } else {
    out["mode"] = to_string(r.mode);
    out["top_layer"] = r.top_layer ? nlohmann::json(*r.top_layer) : nlohmann::json(nullptr);
    out["failing_j"] = r.failing_j ? nlohmann::json(*r.failing_j) : nlohmann::json(nullptr);
    out["descent_steps"] = r.descent_steps;
  }
  if (r.elapsed_ms) out["elapsed_ms"] = *r.elapsed_ms;
  return out;
}

ConjectureReport conjecture_report_from_json(const nlohmann::json& j) {
  ConjectureReport r;
  r.id = j.at("id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.conjecture = j.at("conjecture").get<int>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.k = j.at("k").get<std::size_t>();
  r.edges = j.at("edges").get<std::vector<std::size_t>>();
  r.complement_order = j.at("complement_order").get<std::vector<std::size_t>>();
  r.basis_seed = j.at("basis_seed").get<std::uint64_t>();
  const std::size_t m = edge_count(r.n);
  r.g = PairVector(r.n, BitVec::from_hex(j.at("g").get<std::string>(), m * m));
  for (const auto& pair : j.at("alpha")) {
    r.alpha.emplace_back(pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>());
  }
  r.pivot_ones = j.at("pivot_ones").get<std::vector<std::size_t>>();
  r.meta = j.value("meta", nlohmann::json::object());
  if (r.conjecture == 1) {
    r.failing_m = j.at("failing_m").get<std::vector<std::size_t>>();
  } else {
    r.mode = descent_mode_from_string(j.at("mode").get<std::string>());
    if (!j.at("top_layer").is_null()) r.top_layer = j.at("top_layer").get<std::size_t>();
    if (!j.at("failing_j").is_null()) r.failing_j = j.at("failing_j").get<std::size_t>();
    r.descent_steps = j.at("descent_steps").get<std::size_t>();
  }
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

bool replay(const nlohmann::json& report, const BasisOptions& options) {
  const ConjectureReport stored = conjecture_report_from_json(report);
  const TimeGraph graph = TimeGraph::from_indices(stored.n, stored.edges);
  const CanonicalBasis cb = build_canonical_basis(graph, stored.complement_order, stored.basis_seed);
  ConjectureReport again;
  if (stored.conjecture == 1) {
    again = test_conjecture1(cb, stored.g);
  } else if (stored.conjecture == 2) {
    const auto hp = algorithm1(stored.n, options);
    const SupportedImage image(graph, hp);
    again = test_conjecture2(cb, stored.g, image, stored.mode);
  } else {
    throw std::invalid_argument("replay: unknown conjecture id");
  }
  return again.verdict == stored.verdict && again.k == stored.k && again.alpha == stored.alpha &&
         again.pivot_ones == stored.pivot_ones && again.failing_m == stored.failing_m &&
         again.top_layer == stored.top_layer && again.failing_j == stored.failing_j &&
         again.descent_steps == stored.descent_steps;
}

// --- Instance-wise implication ---

namespace {

ImplicationCheck implication_on(const CanonicalBasis& cb, const PairVector& g, const SupportedImage& image,
                                bool hamiltonian) {
  ImplicationCheck out;
  out.applicable = !hamiltonian && value(g) && is_supported_in(g, cb.graph());
  if (!out.applicable) return out;
  out.conjecture1 = test_conjecture1(cb, g);
  out.conjecture2_top = test_conjecture2(cb, g, image, DescentMode::kTop);
  out.conjecture2_chain = test_conjecture2(cb, g, image, DescentMode::kChain);
  out.holds = out.conjecture1.verdict == Verdict::kViolated ||
              out.conjecture2_top.verdict == Verdict::kViolated ||
              out.conjecture2_chain.verdict == Verdict::kViolated;
  return out;
}

}  // namespace

ImplicationCheck check_nonhamiltonian_implication(const TimeGraph& g, const PairVector& supported,
                                                  std::span<const Permutation> hp_basis) {
  const bool hamiltonian = is_hamiltonian_oracle(g);
  if (hamiltonian || !value(supported) || !is_supported_in(supported, g)) return ImplicationCheck{};
  const CanonicalBasis cb = build_canonical_basis(g, default_complement_order(g));
  const SupportedImage image(g, hp_basis);
  return implication_on(cb, supported, image, hamiltonian);
}

// --- Random instances ---

std::string time_graph_kind_name(int kind) {
  switch (kind) {
    case 0: return "reduced_graph";
    case 1: return "uniform_edges";
    case 2: return "planted_paths";
  }
  throw std::invalid_argument("unknown time-graph kind");
}

TimeGraph random_time_graph(int n, int kind, std::uint64_t seed) {
  Rng rng(seed);
  switch (kind) {
    case 0: {
      Graph g(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (rng.coin()) g.add_edge(i, j);
      return reduce_hamp(g);
    }
    case 1: {
      const std::uint64_t tenths = 2 + rng.below(6);
      TimeGraph g(n);
      for (std::size_t e = 0; e < edge_count(n); ++e)
        if (rng.chance(tenths, 10)) g.add_index(e);
      return g;
    }
    case 2: {
      TimeGraph g(n);
      const std::size_t paths = 1 + rng.below(3);
      std::vector<int> image(static_cast<std::size_t>(n));
      for (std::size_t p = 0; p < paths; ++p) {
        for (int v = 0; v < n; ++v) image[static_cast<std::size_t>(v)] = v + 1;
        rng.shuffle(image);
        for (std::size_t e : incident_edge_indices(Permutation(image))) g.add_index(e);
      }
      for (std::size_t e = 0; e < edge_count(n); ++e)
        if (rng.chance(1, 10)) g.add_index(e);
      return g;
    }
  }
  throw std::invalid_argument("unknown time-graph kind");
}

// --- Campaigns ---

void VerdictCounts::add(Verdict v) {
  switch (v) {
    case Verdict::kHolds: ++holds; break;
    case Verdict::kViolated: ++violated; break;
    case Verdict::kVacuous: ++vacuous; break;
  }
}

namespace {

nlohmann::json counts_json(const VerdictCounts& c) {
  return {{"holds", c.holds}, {"violated", c.violated}, {"vacuous", c.vacuous}, {"total", c.total()}};
}

PairVector sample_supported(int generator, const std::vector<Permutation>& incident,
                            const SupportedSubspace& space, int n, Rng& rng) {
  PairVector g(n);
  if (generator == 0) {
    std::vector<Permutation> chosen;
    for (const Permutation& p : incident)
      if (rng.coin()) chosen.push_back(p);
    if (chosen.empty() && !incident.empty()) chosen.push_back(incident[rng.below(incident.size())]);
    return sum_tpn(chosen, n);
  }
  for (const PairVector& v : space.vectors)
    if (rng.coin()) g ^= v;
  return g;
}

}  // namespace

nlohmann::json to_json(const CampaignSummary& s, const CampaignConfig& c) {
  nlohmann::json out{{"n", c.n},
                     {"trials", s.trials},
                     {"seed", c.seed},
                     {"orders", c.orders},
                     {"mode", to_string(c.mode)},
                     {"reports", s.reports},
                     {"replay_failures", s.replay_failures},
                     {"implication_instances", s.implication_instances},
                     {"implication_failures", s.implication_failures}};
  if (c.conjecture != 2) out["conjecture1"] = counts_json(s.conjecture1);
  if (c.conjecture != 1) out["conjecture2"] = counts_json(s.conjecture2);
  return out;
}

CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out) {
  if (config.conjecture < 0 || config.conjecture > 2) throw std::invalid_argument("conjecture must be 1 or 2");
  if (config.orders == 0) throw std::invalid_argument("orders must be at least 1");
  const int n = config.n;
  const auto hp = algorithm1(n, config.basis);
  Rng master(config.seed);
  CampaignSummary summary;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t trial_seed = master.next();
    Rng rng(trial_seed);
    const int kind = static_cast<int>(trial % 3);
    const int generator = static_cast<int>((trial / 3) % 2);
    const TimeGraph graph = random_time_graph(n, kind, rng.next());
    const SupportedImage image(graph, hp);
    const auto incident = incident_permutations(graph);
    const PairVector g = sample_supported(generator, incident, image.space(), n, rng);
    const bool hamiltonian = !incident.empty();

    for (std::size_t o = 0; o < config.orders; ++o) {
      const auto order = o == 0 ? default_complement_order(graph) : shuffled_complement_order(graph, rng.next());
      const std::uint64_t basis_seed = (o == 0 && trial % 2 == 0) ? 0 : (rng.next() | 1u);
      const CanonicalBasis cb = build_canonical_basis(graph, order, basis_seed);
      for (int conj = 1; conj <= 2; ++conj) {
        if (config.conjecture != 0 && config.conjecture != conj) continue;
        const auto start = std::chrono::steady_clock::now();
        ConjectureReport r = conj == 1 ? test_conjecture1(cb, g) : test_conjecture2(cb, g, image, config.mode);
        const auto stop = std::chrono::steady_clock::now();
        r.id = "n" + std::to_string(n) + "-s" + std::to_string(config.seed) + "-t" + std::to_string(trial) +
               "-o" + std::to_string(o) + "-c" + std::to_string(conj);
        r.meta = {{"trial", trial},
                  {"trial_seed", trial_seed},
                  {"graph_kind", time_graph_kind_name(kind)},
                  {"generator", generator == 0 ? "incident_span" : "supported_span"},
                  {"hamiltonian", hamiltonian},
                  {"value", value(g) ? 1 : 0}};
        if (config.timing) r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        const nlohmann::json line = to_json(r);
        const std::string text = line.dump();
        if (!replay(nlohmann::json::parse(text), config.basis)) ++summary.replay_failures;
        out << text << '\n';
        (conj == 1 ? summary.conjecture1 : summary.conjecture2).add(r.verdict);
        ++summary.reports;
      }
      const ImplicationCheck imp = implication_on(cb, g, image, hamiltonian);
      if (imp.applicable) {
        ++summary.implication_instances;
        if (!imp.holds) ++summary.implication_failures;
      }
    }
    ++summary.trials;
  }
  out << nlohmann::json{{"summary", to_json(summary, config)}}.dump() << '\n';
  return summary;
}

// --- Cross-validation ---

CrossvalSummary crossval(const CrossvalConfig& config) {
  const int n = config.n;
  const auto hp = algorithm1(n, config.basis);
  const int pairs = n * (n - 1) / 2;
  if (pairs >= 63) throw std::invalid_argument("crossval: n too large for mask enumeration");
  const unsigned long long all = (1ull << pairs);

  std::vector<unsigned long long> masks;
  if (config.source == GraphSource::kExhaustive) {
    for (unsigned long long mask = 0; mask < all; ++mask) masks.push_back(mask);
  } else {
    Rng rng(config.seed);
    for (std::size_t c = 0; c < config.count; ++c) masks.push_back(rng.next() & (all - 1));
  }

  CrossvalSummary s;
  for (unsigned long long mask : masks) {
    const Graph graph = Graph::from_mask(n, mask);
    const bool oracle = hamiltonian_path_oracle(graph);
    const TimeGraph tg = reduce_hamp(graph);
    const LinearSystem sys = assemble_system(tg, hp);
    const Decision d = solve_system(sys);
    ++s.graphs;
    if (d.answer && !satisfies(sys, *d.witness)) ++s.witness_failures;
    if (oracle && d.answer) {
      ++s.agree_yes;
    } else if (!oracle && !d.answer) {
      ++s.agree_no;
    } else if (oracle && !d.answer) {
      ++s.false_negatives;
    } else {
      ++s.false_positives;
      const PairVector g = combine(hp, *d.witness, n);
      const ImplicationCheck imp = check_nonhamiltonian_implication(tg, g, hp);
      if (!imp.applicable || !imp.holds) ++s.implication_failures;
      nlohmann::json edges = nlohmann::json::array();
      for (auto [i, j] : graph.edges()) edges.push_back({i, j});
      s.counterexamples.push_back({{"n", n},
                                   {"mask", mask},
                                   {"graph_edges", std::move(edges)},
                                   {"witness", d.witness->set_bits()},
                                   {"N", d.basis_size},
                                   {"rows", d.rows},
                                   {"rank", d.rank},
                                   {"implication_holds", imp.applicable && imp.holds},
                                   {"conjecture1", to_json(imp.conjecture1)},
                                   {"conjecture2_top", to_json(imp.conjecture2_top)},
                                   {"conjecture2_chain", to_json(imp.conjecture2_chain)}});
    }
  }
  return s;
}

bool replay_counterexample(const nlohmann::json& entry, const BasisOptions& options) {
  const int n = entry.at("n").get<int>();
  Graph graph(n);
  for (const auto& e : entry.at("graph_edges")) graph.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  if (hamiltonian_path_oracle(graph)) return false;
  const auto hp = algorithm1(n, options);
  const TimeGraph tg = reduce_hamp(graph);
  BitVec witness(hp.size());
  for (const auto& k : entry.at("witness")) witness.set(k.get<std::size_t>());
  if (!satisfies(assemble_system(tg, hp), witness)) return false;
  const PairVector g = combine(hp, witness, n);
  if (!is_supported_in(g, tg) || !value(g)) return false;
  for (const char* key : {"conjecture1", "conjecture2_top", "conjecture2_chain"}) {
    if (!replay(entry.at(key), options)) return false;
  }
  return true;
}

nlohmann::json to_json(const CrossvalSummary& s, const CrossvalConfig& c) {
  nlohmann::json out{{"n", c.n},
                     {"source", c.source == GraphSource::kExhaustive ? "exhaustive" : "random"},
                     {"graphs", s.graphs},
                     {"agree_yes", s.agree_yes},
                     {"agree_no", s.agree_no},
                     {"false_positives", s.false_positives},
                     {"false_negatives", s.false_negatives},
                     {"witness_failures", s.witness_failures},
                     {"implication_failures", s.implication_failures},
                     {"counterexamples", s.counterexamples}};
  if (c.source == GraphSource::kRandom) {
    out["seed"] = c.seed;
    out["count"] = c.count;
  }
  return out;
}

// --- Dimension table ---

std::vector<DimensionRow> dimension_table(int min_n, int max_n, const BasisOptions& options) {
  if (min_n < 2 || max_n < min_n) throw std::invalid_argument("dimension_table: need 2 <= min <= max");
  std::vector<DimensionRow> rows;
  for (int n = min_n; n <= max_n; ++n) {
    const auto perms = all_permutations(n);
    std::vector<BitVec> f;
    std::vector<BitVec> g;
    for (const Permutation& p : perms) {
      f.push_back(tn(p).bits());
      g.push_back(tpn(p).bits());
    }
    DimensionRow row;
    row.n = n;
    row.edges = edge_count(n);
    row.dim_hn = gf2::rank(f);
    row.dim_hpn = gf2::rank(g);
    row.basis_size = algorithm1(n, options).size();
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const std::vector<DimensionRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const DimensionRow& r : rows) {
    out.push_back({{"n", r.n},
                   {"edges", r.edges},
                   {"dim_H", r.dim_hn},
                   {"dim_HP", r.dim_hpn},
                   {"N", r.basis_size},
                   {"N_equals_dim_HP", r.basis_size == r.dim_hpn}});
  }
  return out;
}

}  // namespace tglab
