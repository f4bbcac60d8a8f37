#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <variant>

#include "tglab/gf2.hpp"
#include "tglab/liftbasis.hpp"
#include "tglab/permvec.hpp"
#include "tglab/rng.hpp"

using namespace tglab;
namespace fs = std::filesystem;

namespace {

std::size_t brute_dim_hp(int n) {
  std::vector<BitVec> vs;
  for (const auto& p : all_permutations(n)) vs.push_back(tpn(p).bits());
  return gf2::rank(vs);
}

gf2::Basis span_of(const std::vector<Permutation>& perms, int n) {
  const std::size_t m = edge_count(n);
  gf2::Basis b(m * m, false);
  for (const auto& p : perms) b.insert(tpn(p).bits());
  return b;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("q_lift and r_lift examples") {
  const Lift two = Lift::canonical(4, 2);
  CHECK(two(1) == 1);
  CHECK(two(2) == 3);
  CHECK(two(3) == 4);
  CHECK(q_lift(two, Permutation::identity(3)) == Permutation({2, 1, 3, 4}));
  CHECK(r_lift(two, Edge{1, 3, 1}) == Edge{1, 4, 2});
  for (int n = 2; n <= 7; ++n) {
    CHECK(q_lift(Lift::canonical(n, 1), Permutation::identity(n - 1)) == Permutation::identity(n));
  }
}

TEST_CASE("lift tables are validated") {
  CHECK_THROWS_AS(Lift(4, 2, {1, 2, 3}), std::invalid_argument);  // hits the anchor
  CHECK_THROWS_AS(Lift(4, 2, {1, 3, 3}), std::invalid_argument);  // not injective
  CHECK_THROWS_AS(Lift::canonical(4, 5), std::invalid_argument);
  const Lift custom(4, 2, {4, 1, 3});
  CHECK(custom.inverse(4) == 1);
  CHECK(q_lift(custom, Permutation::identity(3)) == Permutation({2, 4, 1, 3}));
}

TEST_CASE("q_lift is a bijection onto permutations starting at the anchor (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    for (int anchor = 1; anchor <= n; ++anchor) {
      const Lift lift = Lift::canonical(n, anchor);
      std::set<Permutation> image;
      for (const auto& p : all_permutations(n - 1)) {
        const Permutation q = q_lift(lift, p);
        CHECK(q(1) == anchor);
        CHECK(q_unlift(lift, q) == p);
        image.insert(q);
      }
      std::set<Permutation> expected;
      for (const auto& p : all_permutations(n))
        if (p(1) == anchor) expected.insert(p);
      CHECK(image == expected);
    }
  }
}

TEST_CASE("r_lift is a bijection onto E(n, anchor) of size (n-1)^2 (n-2)") {
  for (int n = 3; n <= 7; ++n) {
    for (int anchor = 1; anchor <= n; ++anchor) {
      const Lift lift = Lift::canonical(n, anchor);
      std::set<Edge> image;
      for (std::size_t k = 0; k < edge_count(n - 1); ++k) {
        const Edge e = edge_from_index(k, n - 1);
        const Edge r = r_lift(lift, e);
        CHECK(in_lifted_edges(r, n, anchor));
        CHECK(r_unlift(lift, r) == e);
        image.insert(r);
      }
      const std::size_t expected = static_cast<std::size_t>((n - 1) * (n - 1) * (n - 2));
      CHECK(image.size() == expected);
      std::size_t members = 0;
      for (std::size_t k = 0; k < edge_count(n); ++k) members += in_lifted_edges(edge_from_index(k, n), n, anchor);
      CHECK(members == expected);
    }
  }
}

TEST_CASE("incidence and pair entries transport through the lifts, exhaustive n = 4") {
  const int n = 4;
  for (int anchor = 1; anchor <= n; ++anchor) {
    const Lift lift = Lift::canonical(n, anchor);
    for (const auto& p : all_permutations(n - 1)) {
      const Permutation q = q_lift(lift, p);
      const PairVector low = tpn(p);
      const PairVector high = tpn(q);
      for (std::size_t a = 0; a < edge_count(n - 1); ++a) {
        const Edge e = edge_from_index(a, n - 1);
        CHECK(is_incident(e, p) == is_incident(r_lift(lift, e), q));
        for (std::size_t b = 0; b < edge_count(n - 1); ++b) {
          const Edge f = edge_from_index(b, n - 1);
          CHECK(low(e, f) == high(r_lift(lift, e), r_lift(lift, f)));
        }
      }
    }
  }
}

TEST_CASE("pair entries transport through the lifts, sampled n = 5") {
  Rng rng(19);
  const int n = 5;
  const auto perms = all_permutations(n - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const int anchor = 1 + static_cast<int>(rng.below(n));
    const Lift lift = Lift::canonical(n, anchor);
    const auto& p = perms[rng.below(perms.size())];
    const Edge e = edge_from_index(rng.below(edge_count(n - 1)), n - 1);
    const Edge f = edge_from_index(rng.below(edge_count(n - 1)), n - 1);
    CHECK(tpn(p)(e, f) == tpn(q_lift(lift, p))(r_lift(lift, e), r_lift(lift, f)));
  }
}

TEST_CASE("dependencies among pair indicators survive lifting") {
  // Order 6 has exactly one dependency among all 720 pair indicators; lift
  // it to order 7 through every anchor.
  const auto perms = all_permutations(6);
  const std::size_t m = edge_count(6);
  gf2::Basis basis(m * m);
  std::vector<Permutation> independent;
  std::vector<std::vector<Permutation>> relations;
  for (const auto& p : perms) {
    const auto res = basis.insert(tpn(p).bits());
    if (const auto* dep = std::get_if<gf2::Dependent>(&res)) {
      std::vector<Permutation> relation{p};
      for (std::size_t k : dep->coeffs.set_bits()) relation.push_back(independent[k]);
      relations.push_back(std::move(relation));
    } else {
      independent.push_back(p);
    }
  }
  REQUIRE(relations.size() == 1);
  for (const auto& relation : relations) {
    CHECK_FALSE(sum_tpn(relation, 6).any());
    for (int anchor = 1; anchor <= 7; ++anchor) {
      const Lift lift = Lift::canonical(7, anchor);
      PairVector lifted(7);
      for (const auto& p : relation) lifted ^= tpn(q_lift(lift, p));
      CHECK_FALSE(lifted.any());
    }
  }
}

TEST_CASE("base bases") {
  CHECK(base_basis(1).size() == 1);
  CHECK(base_basis(2).size() == 2);
  CHECK(base_basis(3).size() == brute_dim_hp(3));
  CHECK_THROWS_AS(base_basis(4), std::invalid_argument);
  CHECK_THROWS_AS(base_basis(0), std::invalid_argument);
}

TEST_CASE("algorithm1 spans H_P^n") {
  CHECK(algorithm1(3).size() == brute_dim_hp(3));
  for (int n = 3; n <= 5; ++n) {
    const auto perms = algorithm1(n);
    const auto span = span_of(perms, n);
    CHECK(span.rank() == perms.size());
    CHECK(perms.size() == brute_dim_hp(n));
    for (const auto& p : all_permutations(n)) CHECK(span.contains(tpn(p).bits()));
  }
}

TEST_CASE("algorithm1 respects the cap") {
  BasisOptions options;
  options.cap = 4;
  CHECK_THROWS_AS(algorithm1(5, options), OracleScaleExceeded);
  CHECK_THROWS_AS(algorithm1(0), std::invalid_argument);
}

TEST_CASE("basis json round trip") {
  const auto perms = algorithm1(4);
  const auto j = basis_to_json(4, perms);
  CHECK(basis_from_json(j, 4) == perms);
  CHECK_THROWS_AS(basis_from_json(j, 5), std::invalid_argument);
}

TEST_CASE("disk cache is written, reused, and rebuilt when damaged") {
  TempDir dir("tglab_test_cache");
  BasisOptions options;
  options.cache_dir = dir.path;

  clear_basis_memo();
  const auto fresh = algorithm1(5, options);
  const fs::path file = dir.path / "hp_basis_n5.json";
  REQUIRE(fs::exists(file));
  REQUIRE(fs::exists(dir.path / "hp_basis_n4.json"));

  clear_basis_memo();
  CHECK(algorithm1(5, options) == fresh);

  // Garbage is ignored.
  { std::ofstream(file) << "{not json"; }
  clear_basis_memo();
  CHECK(algorithm1(5, options) == fresh);

  // A dependent list is ignored.
  {
    auto broken = fresh;
    broken.push_back(broken.front());
    std::ofstream(file) << basis_to_json(5, broken).dump();
  }
  clear_basis_memo();
  CHECK(algorithm1(5, options) == fresh);
  clear_basis_memo();
}
