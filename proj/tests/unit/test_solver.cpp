#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unordered_set>

#include "tglab/gf2.hpp"
#include "tglab/rng.hpp"
#include "tglab/solver.hpp"

using namespace tglab;

namespace {

TimeGraph random_graph(int n, Rng& rng, std::uint64_t num, std::uint64_t den) {
  TimeGraph g(n);
  for (std::size_t k = 0; k < edge_count(n); ++k)
    if (rng.chance(num, den)) g.add_index(k);
  return g;
}

/// Brute force over every coefficient vector: is some combination of the
/// basis supported in g with value 1?
bool exists_supported_value_one(const TimeGraph& g, const std::vector<Permutation>& basis) {
  const std::size_t vars = basis.size();
  for (unsigned long long mask = 0; mask < (1ULL << vars); ++mask) {
    BitVec x(vars);
    for (std::size_t k = 0; k < vars; ++k)
      if (mask & (1ULL << k)) x.set(k);
    const PairVector h = combine(basis, x, g.order());
    if (value(h) && is_supported_in(h, g)) return true;
  }
  return false;
}

void check_witness(const TimeGraph& g, const std::vector<Permutation>& basis, const Decision& d) {
  REQUIRE(d.witness.has_value());
  CHECK(satisfies(assemble_system(g, basis), *d.witness));
  const PairVector h = combine(basis, *d.witness, g.order());
  // E(1) is empty, so every element of order 1 has value 0.
  if (g.order() >= 2) CHECK(value(h));
  CHECK(is_supported_in(h, g));
}

}  // namespace

TEST_CASE("complete time-graph: only the value row, always solvable") {
  for (int n = 2; n <= 5; ++n) {
    const auto basis = algorithm1(n);
    const TimeGraph g = TimeGraph::complete(n);
    const auto sys = assemble_system(g, basis);
    REQUIRE(sys.rows.size() == 1);
    CHECK(sys.rows[0].kind == RowKind::kValue);
    CHECK(sys.rows[0].rhs);
    CHECK(sys.rows[0].coeffs.popcount() == basis.size());
    const auto d = solve_system(sys);
    CHECK(d.answer);
    check_witness(g, basis, d);
  }
}

TEST_CASE("empty time-graph at n = 3 is inconsistent") {
  const auto basis = algorithm1(3);
  const auto d = decide_time_graph(TimeGraph(3), basis);
  CHECK_FALSE(d.answer);
  CHECK_FALSE(d.witness.has_value());
  CHECK_FALSE(exists_supported_value_one(TimeGraph(3), basis));
}

TEST_CASE("row count bound and row hygiene") {
  Rng rng(201);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(2));
    const auto basis = algorithm1(n);
    const TimeGraph g = random_graph(n, rng, 1, 2);
    const auto sys = assemble_system(g, basis);
    const std::size_t complement = edge_count(n) - g.size();
    CHECK(sys.rows_before_dedup == 1 + complement * edge_count(n));
    CHECK(sys.rows.size() <= sys.rows_before_dedup);
    std::size_t value_rows = 0;
    std::unordered_set<BitVec, BitVecHash> seen;
    for (const auto& row : sys.rows) {
      if (row.kind == RowKind::kValue) {
        ++value_rows;
        continue;
      }
      CHECK(row.coeffs.any());
      CHECK_FALSE(row.rhs);
      CHECK_FALSE(g.contains_index(row.e));
      CHECK(seen.insert(row.coeffs).second);
      // Coefficient k is tpn(basis[k])(e, e').
      for (std::size_t k = 0; k < basis.size(); ++k) CHECK(row.coeffs.test(k) == tpn(basis[k]).at(row.e, row.e_prime));
    }
    CHECK(value_rows == 1);
  }
}

TEST_CASE("order 1: the single vertex is a path") {
  const auto d = algorithm2(Graph(1));
  CHECK(d.answer);
  CHECK(d.basis_size == 1);
  CHECK(hamiltonian_path_oracle(Graph(1)));
}

TEST_CASE("order mismatch is rejected") {
  const auto basis = algorithm1(3);
  CHECK_THROWS_AS(assemble_system(TimeGraph(4), basis), std::invalid_argument);
}

TEST_CASE("solvability matches brute force over all coefficient vectors at n = 3") {
  Rng rng(203);
  const auto basis = algorithm1(3);
  for (int trial = 0; trial < 300; ++trial) {
    const TimeGraph g = random_graph(3, rng, 1 + rng.below(4), 5);
    const auto d = decide_time_graph(g, basis);
    CHECK(d.answer == exists_supported_value_one(g, basis));
    if (d.answer) check_witness(g, basis, d);
  }
}

TEST_CASE("complete graphs are accepted") {
  for (int n = 3; n <= 5; ++n) {
    const auto d = algorithm2(Graph::complete(n));
    CHECK(d.answer);
    check_witness(reduce_hamp(Graph::complete(n)), algorithm1(n), d);
  }
}

TEST_CASE("star K_{1,3}: answer recorded against the oracle") {
  const Graph star = Graph::star(3);
  CHECK_FALSE(hamiltonian_path_oracle(star));
  const auto d = algorithm2(star);
  if (d.answer) check_witness(reduce_hamp(star), algorithm1(4), d);
  MESSAGE("star K_{1,3}: algorithm answer = " << std::string(d.answer ? "yes" : "no"));
}

TEST_CASE("no false negatives on any graph with n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
    for (unsigned long long mask = 0; mask < (1ULL << pairs); ++mask) {
      const Graph g = Graph::from_mask(n, mask);
      const auto d = algorithm2(g);
      if (hamiltonian_path_oracle(g)) CHECK(d.answer);
      if (d.answer) check_witness(reduce_hamp(g), algorithm1(n), d);
    }
  }
}

TEST_CASE("coordinates of an incident permutation solve the system") {
  Rng rng(207);
  const auto basis = algorithm1(4);
  const std::size_t m = edge_count(4);
  gf2::Basis span(m * m);
  for (const auto& p : basis) span.insert(tpn(p).bits());
  for (int trial = 0; trial < 30; ++trial) {
    const TimeGraph g = random_graph(4, rng, 2, 3);
    const auto perms = incident_permutations(g);
    if (perms.empty()) continue;
    const auto coords = span.coords(tpn(perms[rng.below(perms.size())]).bits());
    REQUIRE(coords.has_value());
    CHECK(satisfies(assemble_system(g, basis), *coords));
  }
}

TEST_CASE("adding edges never turns yes into no") {
  Rng rng(209);
  const auto basis = algorithm1(4);
  for (int trial = 0; trial < 40; ++trial) {
    TimeGraph g = random_graph(4, rng, 1, 3);
    bool before = decide_time_graph(g, basis).answer;
    for (int step = 0; step < 5; ++step) {
      g.add_index(rng.below(edge_count(4)));
      const bool after = decide_time_graph(g, basis).answer;
      if (before) CHECK(after);
      before = after;
    }
  }
}

TEST_CASE("decision json") {
  const auto d = algorithm2(Graph::path(3));
  const auto j = to_json(d, 3);
  CHECK(j.at("answer") == "yes");
  CHECK(j.at("N") == algorithm1(3).size());
  CHECK(j.contains("witness"));
  const auto no = to_json(decide_time_graph(TimeGraph(3), algorithm1(3)), 3);
  CHECK(no.at("answer") == "no");
  CHECK_FALSE(no.contains("witness"));
}
