#include "tglab/liftbasis.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

#include "tglab/gf2.hpp"
#include "tglab/permvec.hpp"

namespace tglab {

Lift Lift::canonical(int n, int anchor) {
  std::vector<int> table;
  for (int j = 1; j <= n - 1; ++j) table.push_back(j < anchor ? j : j + 1);
  return Lift(n, anchor, std::move(table));
}

Lift::Lift(int n, int anchor, std::vector<int> table)
    : n_(n), anchor_(anchor), table_(std::move(table)), inverse_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 2 || anchor < 1 || anchor > n) throw std::invalid_argument("Lift: anchor out of range");
  if (table_.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("Lift: table must have n - 1 entries");
  }
  for (std::size_t j = 0; j < table_.size(); ++j) {
    const int v = table_[j];
    if (v < 1 || v > n || v == anchor || inverse_[static_cast<std::size_t>(v)] != 0) {
      throw std::invalid_argument("Lift: table is not a bijection onto {1..n} minus the anchor");
    }
    inverse_[static_cast<std::size_t>(v)] = static_cast<int>(j) + 1;
  }
}

int Lift::inverse(int v) const {
  if (v < 1 || v > n_ || v == anchor_) throw std::out_of_range("Lift::inverse: value not in image");
  return inverse_[static_cast<std::size_t>(v)];
}

Permutation q_lift(const Lift& lift, const Permutation& p) {
  if (p.size() != lift.order() - 1) throw std::invalid_argument("q_lift: permutation must have order n - 1");
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(lift.order()));
  image.push_back(lift.anchor());
  for (int j = 1; j <= p.size(); ++j) image.push_back(lift(p(j)));
  return Permutation(std::move(image));
}

Permutation q_unlift(const Lift& lift, const Permutation& p) {
  if (p.size() != lift.order() || p(1) != lift.anchor()) {
    throw std::invalid_argument("q_unlift: permutation does not start at the anchor");
  }
  std::vector<int> image;
  for (int j = 2; j <= p.size(); ++j) image.push_back(lift.inverse(p(j)));
  return Permutation(std::move(image));
}

Edge r_lift(const Lift& lift, const Edge& e) {
  if (!is_valid_edge(e, lift.order() - 1)) throw std::invalid_argument("r_lift: edge not in E(n - 1)");
  return Edge{lift(e.i), lift(e.j), e.t + 1};
}

Edge r_unlift(const Lift& lift, const Edge& e) {
  if (!in_lifted_edges(e, lift.order(), lift.anchor())) {
    throw std::invalid_argument("r_unlift: edge not in E(n, anchor)");
  }
  return Edge{lift.inverse(e.i), lift.inverse(e.j), e.t - 1};
}

bool in_lifted_edges(const Edge& e, int n, int anchor) {
  return is_valid_edge(e, n) && e.t >= 2 && e.i != anchor && e.j != anchor;
}

std::vector<Permutation> base_basis(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("base_basis: n must be in 1..3");
  if (n == 1) return {Permutation::identity(1)};
  const std::size_t m = edge_count(n);
  gf2::Basis basis(m * m, false);
  std::vector<Permutation> out;
  for (const Permutation& p : all_permutations(n)) {
    if (std::holds_alternative<gf2::Extended>(basis.insert(tpn(p).bits()))) out.push_back(p);
  }
  return out;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* value = std::getenv(kCacheDirEnv);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

nlohmann::json basis_to_json(int n, const std::vector<Permutation>& perms) {
  nlohmann::json list = nlohmann::json::array();
  for (const Permutation& p : perms) list.push_back(p.image());
  return nlohmann::json{{"n", n}, {"permutations", std::move(list)}};
}

std::vector<Permutation> basis_from_json(const nlohmann::json& j, int expected_n) {
  if (j.at("n").get<int>() != expected_n) throw std::invalid_argument("basis file: order mismatch");
  std::vector<Permutation> out;
  for (const auto& item : j.at("permutations")) {
    Permutation p(item.get<std::vector<int>>());
    if (p.size() != expected_n) throw std::invalid_argument("basis file: permutation of wrong order");
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("hp_basis_n" + std::to_string(n) + ".json");
}

std::optional<std::vector<Permutation>> load_cached(const std::filesystem::path& dir, int n) {
  std::ifstream in(cache_file(dir, n));
  if (!in) return std::nullopt;
  try {
    auto perms = basis_from_json(nlohmann::json::parse(in), n);
    const std::size_t m = edge_count(n);
    gf2::Basis check(m * m, false);
    for (const Permutation& p : perms) {
      if (!std::holds_alternative<gf2::Extended>(check.insert(tpn(p).bits()))) return std::nullopt;
    }
    return perms;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are rebuilt
  }
}

void store_cached(const std::filesystem::path& dir, int n, const std::vector<Permutation>& perms) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto target = cache_file(dir, n);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << basis_to_json(n, perms).dump() << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
}

std::vector<Permutation> lift_step(int n, const std::vector<Permutation>& lower) {
  const std::size_t m = edge_count(n);
  gf2::Basis basis(m * m, false);
  std::vector<Permutation> out;
  for (int anchor = 1; anchor <= n; ++anchor) {
    const Lift lift = Lift::canonical(n, anchor);
    for (const Permutation& p : lower) {
      Permutation lifted = q_lift(lift, p);
      if (std::holds_alternative<gf2::Extended>(basis.insert(tpn(lifted).bits()))) {
        out.push_back(std::move(lifted));
      }
    }
  }
  return out;
}

// Process-wide memo; the construction is deterministic so sharing is safe.
std::mutex memo_mutex;
std::map<int, std::vector<Permutation>> memo;

}  // namespace

void clear_basis_memo() {
  std::lock_guard lock(memo_mutex);
  memo.clear();
}

std::vector<Permutation> algorithm1(int n, const BasisOptions& options) {
  if (n < 1) throw std::invalid_argument("algorithm1: n must be at least 1");
  if (n > options.cap) {
    throw OracleScaleExceeded("basis construction exceeds cap: n = " + std::to_string(n) + " > " +
                              std::to_string(options.cap));
  }
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  std::vector<Permutation> result;
  bool from_disk = false;
  if (options.cache_dir && n > 3) {
    if (auto cached = load_cached(*options.cache_dir, n)) {
      result = std::move(*cached);
      from_disk = true;
    }
  }
  if (!from_disk) {
    result = n <= 3 ? base_basis(n) : lift_step(n, algorithm1(n - 1, options));
    if (options.cache_dir && n > 3) store_cached(*options.cache_dir, n, result);
  }
  std::lock_guard lock(memo_mutex);
  memo.emplace(n, result);
  return result;
}

}  // namespace tglab
