#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "tglab/lab.hpp"
#include "tglab/rng.hpp"

using namespace tglab;

namespace {

TimeGraph random_graph(int n, Rng& rng, std::uint64_t num, std::uint64_t den) {
  TimeGraph g(n);
  for (std::size_t k = 0; k < edge_count(n); ++k)
    if (rng.chance(num, den)) g.add_index(k);
  return g;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("supported subspace: complete graph gives all of H_P^n") {
  for (int n = 2; n <= 4; ++n) {
    const auto hp = algorithm1(n);
    const auto space = supported_subspace(TimeGraph::complete(n), hp);
    CHECK(space.vectors.size() == hp.size());
  }
}

TEST_CASE("supported subspace: empty graph") {
  for (int n = 2; n <= 4; ++n) {
    const auto hp = algorithm1(n);
    const auto space = supported_subspace(TimeGraph(n), hp);
    CHECK(space.vectors.empty());
  }
}

TEST_CASE("supported subspace contains every combination of incident indicators") {
  Rng rng(301);
  for (int n = 3; n <= 4; ++n) {
    const auto hp = algorithm1(n);
    const std::size_t m = edge_count(n);
    for (int trial = 0; trial < (n == 3 ? 40 : 15); ++trial) {
      const TimeGraph g = random_graph(n, rng, 1 + rng.below(3), 4);
      const auto space = supported_subspace(g, hp);
      gf2::Basis span(m * m, false);
      for (const auto& v : space.vectors) {
        CHECK(is_supported_in(v, g));
        CHECK(is_symmetric(v));
        span.insert(v.bits());
      }
      CHECK(span.rank() == space.vectors.size());
      const auto perms = incident_permutations(g);
      REQUIRE(perms.size() < 20);
      for (unsigned long long mask = 0; mask < (1ULL << perms.size()); ++mask) {
        PairVector h(n);
        for (std::size_t k = 0; k < perms.size(); ++k)
          if (mask & (1ULL << k)) h ^= tpn(perms[k]);
        CHECK(span.contains(h.bits()));
      }
    }
  }
}

TEST_CASE("supported image preimages") {
  Rng rng(303);
  const auto hp = algorithm1(4);
  for (int trial = 0; trial < 20; ++trial) {
    const TimeGraph g = random_graph(4, rng, 2, 3);
    const SupportedImage image(g, hp);
    CHECK(image.image_rank() <= image.subspace_dimension());
    for (const auto& p : incident_permutations(g)) {
      const auto pre = image.preimage(tn(p));
      REQUIRE(pre.has_value());
      CHECK(pmap(*pre) == tn(p));
      CHECK(is_supported_in(*pre, g));
    }
  }
}

TEST_CASE("conjecture 1: zero g holds, short enumerations are vacuous") {
  const TimeGraph g = reduce_hamp(Graph::path(3));
  const auto cb = build_canonical_basis(g, default_complement_order(g));
  REQUIRE(cb.k() > 1);
  const auto r = test_conjecture1(cb, PairVector(3));
  CHECK(r.verdict == Verdict::kHolds);
  CHECK(r.failing_m.empty());

  TimeGraph almost = TimeGraph::complete(3);
  almost.remove_index(edge_index({1, 1, 1}, 3));
  const auto small = build_canonical_basis(almost, default_complement_order(almost));
  CHECK(small.k() == 1);
  CHECK(test_conjecture1(small, tpn(Permutation({1, 2, 3}))).verdict == Verdict::kVacuous);
}

TEST_CASE("conjecture checks reject unsupported g") {
  const TimeGraph g = reduce_hamp(Graph::path(3));
  const auto cb = build_canonical_basis(g, default_complement_order(g));
  const auto hp = algorithm1(3);
  const SupportedImage image(g, hp);
  const PairVector bad = tpn(Permutation({2, 1, 3}));
  CHECK_THROWS_AS(test_conjecture1(cb, bad), std::invalid_argument);
  CHECK_THROWS_AS(test_conjecture2(cb, bad, image), std::invalid_argument);
}

TEST_CASE("conjecture 2: single incident permutation holds, zero is vacuous") {
  Rng rng(305);
  const auto hp = algorithm1(4);
  for (int trial = 0; trial < 20; ++trial) {
    const TimeGraph g = random_graph(4, rng, 2, 3);
    const auto perms = incident_permutations(g);
    if (perms.empty()) continue;
    const auto cb = build_canonical_basis(g, shuffled_complement_order(g, rng.next() | 1));
    const SupportedImage image(g, hp);
    const auto r = test_conjecture2(cb, tpn(perms[rng.below(perms.size())]), image);
    CHECK(r.verdict == Verdict::kHolds);
    CHECK(r.top_layer == std::optional<std::size_t>{0});
    const auto zero = test_conjecture2(cb, PairVector(4), image);
    CHECK(zero.verdict == Verdict::kVacuous);
    CHECK_FALSE(zero.top_layer.has_value());
  }
}

TEST_CASE("conjecture 2 reports the failing layer when no preimage exists") {
  // Pair the canonical basis of G with the image of the empty graph, whose
  // only supported element is zero: any nonzero top layer must fail.
  const TimeGraph g = TimeGraph::complete(3);
  const auto cb = build_canonical_basis(g, {});
  const auto hp = algorithm1(3);
  const SupportedImage nothing(TimeGraph(3), hp);
  const auto r = test_conjecture2(cb, tpn(Permutation({1, 3, 2})), nothing);
  CHECK(r.verdict == Verdict::kViolated);
  CHECK(r.failing_j == std::optional<std::size_t>{0});
}

TEST_CASE("chain mode descends to layer 0 on supported spans") {
  Rng rng(307);
  const auto hp = algorithm1(4);
  for (int trial = 0; trial < 20; ++trial) {
    const TimeGraph g = random_graph(4, rng, 1, 2);
    const SupportedImage image(g, hp);
    PairVector h(4);
    for (const auto& v : image.space().vectors)
      if (rng.coin()) h ^= v;
    const auto cb = build_canonical_basis(g, shuffled_complement_order(g, rng.next() | 1));
    const auto top = test_conjecture2(cb, h, image, DescentMode::kTop);
    const auto chain = test_conjecture2(cb, h, image, DescentMode::kChain);
    CHECK(chain.mode == DescentMode::kChain);
    if (top.verdict == Verdict::kVacuous) CHECK(chain.verdict == Verdict::kVacuous);
    if (top.verdict == Verdict::kViolated) CHECK(chain.verdict == Verdict::kViolated);
    if (chain.verdict == Verdict::kHolds) CHECK(top.verdict == Verdict::kHolds);
  }
}

TEST_CASE("reports round-trip through json and replay") {
  Rng rng(311);
  const auto hp = algorithm1(4);
  for (int trial = 0; trial < 10; ++trial) {
    const TimeGraph g = random_graph(4, rng, 1, 2);
    const SupportedImage image(g, hp);
    PairVector h(4);
    for (const auto& v : image.space().vectors)
      if (rng.coin()) h ^= v;
    const auto cb = build_canonical_basis(g, shuffled_complement_order(g, rng.next() | 1), rng.next());
    for (const auto& r : {test_conjecture1(cb, h), test_conjecture2(cb, h, image, DescentMode::kChain)}) {
      const auto j = to_json(r);
      const auto back = conjecture_report_from_json(nlohmann::json::parse(j.dump()));
      CHECK(to_json(back) == j);
      CHECK(replay(j));

      // Any tampering with the outcome is detected.
      auto tampered = j;
      tampered["verdict"] = r.verdict == Verdict::kViolated ? "holds" : "violated";
      CHECK_FALSE(replay(tampered));
    }
  }
}

TEST_CASE("verdict and mode names") {
  for (auto v : {Verdict::kHolds, Verdict::kViolated, Verdict::kVacuous}) CHECK(verdict_from_string(to_string(v)) == v);
  for (auto m : {DescentMode::kTop, DescentMode::kChain}) CHECK(descent_mode_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(verdict_from_string("maybe"), std::invalid_argument);
  CHECK_THROWS_AS(descent_mode_from_string("sideways"), std::invalid_argument);
}

TEST_CASE("implication check applies only to non-hamiltonian graphs with value-1 supported g") {
  const auto hp = algorithm1(3);
  const TimeGraph path = reduce_hamp(Graph::path(3));
  CHECK_FALSE(check_nonhamiltonian_implication(path, tpn(Permutation({1, 2, 3})), hp).applicable);
  CHECK_FALSE(check_nonhamiltonian_implication(TimeGraph(3), PairVector(3), hp).applicable);
}

TEST_CASE("random time-graph families are reproducible") {
  for (int kind = 0; kind < 3; ++kind) {
    CHECK(random_time_graph(5, kind, 99) == random_time_graph(5, kind, 99));
    CHECK_FALSE(time_graph_kind_name(kind).empty());
  }
  CHECK(is_hamiltonian_oracle(random_time_graph(5, 2, 7)));
  CHECK_THROWS_AS(random_time_graph(4, 3, 1), std::invalid_argument);
}

TEST_CASE("campaigns are deterministic and every line replays") {
  CampaignConfig config;
  config.n = 4;
  config.trials = 24;
  config.seed = 5;
  config.orders = 2;
  std::ostringstream a;
  std::ostringstream b;
  const auto s1 = run_campaign(config, a);
  const auto s2 = run_campaign(config, b);
  CHECK(a.str() == b.str());
  CHECK(s1.trials == 24);
  CHECK(s1.reports == 24 * 2 * 2);
  CHECK(s1.replay_failures == 0);
  CHECK(s1.implication_failures == 0);
  CHECK(s1.conjecture1.total() == s1.reports / 2);
  CHECK(s2.conjecture2.total() == s2.reports / 2);

  const auto lines = lines_of(a.str());
  REQUIRE(lines.size() == s1.reports + 1);
  for (std::size_t k = 0; k + 1 < lines.size(); ++k) CHECK(replay(nlohmann::json::parse(lines[k])));
  const auto summary = nlohmann::json::parse(lines.back()).at("summary");
  CHECK(summary.at("conjecture1").at("total") == s1.conjecture1.total());

  config.seed = 6;
  std::ostringstream c;
  run_campaign(config, c);
  CHECK(c.str() != a.str());
}

TEST_CASE("campaign restricted to one conjecture") {
  CampaignConfig config;
  config.n = 3;
  config.trials = 10;
  config.conjecture = 2;
  config.mode = DescentMode::kChain;
  std::ostringstream out;
  const auto s = run_campaign(config, out);
  CHECK(s.conjecture1.total() == 0);
  CHECK(s.conjecture2.total() == 10);
  const auto summary = nlohmann::json::parse(lines_of(out.str()).back()).at("summary");
  CHECK_FALSE(summary.contains("conjecture1"));
  CHECK(summary.at("mode") == "chain");
}

TEST_CASE("crossval at n = 4 has no false negatives") {
  CrossvalConfig config;
  config.n = 4;
  const auto s = crossval(config);
  CHECK(s.graphs == 64);
  CHECK(s.false_negatives == 0);
  CHECK(s.witness_failures == 0);
  CHECK(s.implication_failures == 0);
  CHECK(s.agree_yes + s.agree_no + s.false_positives == 64);
  for (const auto& entry : s.counterexamples) CHECK(replay_counterexample(entry));
}

TEST_CASE("fabricated counterexamples do not replay") {
  // Hamiltonian graph: rejected outright.
  const auto hp = algorithm1(3);
  const auto yes = algorithm2(Graph::path(3));
  nlohmann::json entry{{"n", 3}, {"graph_edges", {{1, 2}, {2, 3}}}, {"witness", yes.witness->set_bits()}};
  CHECK_FALSE(replay_counterexample(entry));

  // Non-hamiltonian graph with a witness that violates the system.
  entry["graph_edges"] = nlohmann::json::array({{1, 2}});
  entry["witness"] = {0};
  CHECK_FALSE(replay_counterexample(entry));
}

TEST_CASE("random crossval is reproducible") {
  CrossvalConfig config;
  config.n = 5;
  config.source = GraphSource::kRandom;
  config.count = 30;
  config.seed = 3;
  const auto a = to_json(crossval(config), config);
  const auto b = to_json(crossval(config), config);
  CHECK(a == b);
  CHECK(a.at("graphs") == 30);
  CHECK(a.at("false_negatives") == 0);
}

TEST_CASE("dimension table") {
  const auto rows = dimension_table(2, 5);
  REQUIRE(rows.size() == 4);
  const std::size_t edges[] = {4, 18, 48, 100};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].n == static_cast<int>(k) + 2);
    CHECK(rows[k].edges == edges[k]);
    CHECK(rows[k].basis_size == rows[k].dim_hpn);
  }
  CHECK(rows[0].dim_hn == 2);
  const auto j = to_json(rows);
  CHECK(j[0].at("N_equals_dim_HP") == true);
  CHECK_THROWS_AS(dimension_table(1, 3), std::invalid_argument);
}
