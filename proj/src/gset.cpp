#include "heckelab/module/gset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace heckelab {

GSetModule::GSetModule(int m, std::vector<std::vector<int>> points,
                       std::vector<std::vector<Eigen::Index>> generator_actions)
    : m_(m), points_(std::move(points)), gen_act_(std::move(generator_actions)) {
  require(static_cast<int>(gen_act_.size()) == m_ - 1, errc::rank_mismatch,
          "one action table per generator required");
  for (const auto& table : gen_act_) {
    require(table.size() == points_.size(), errc::shape_mismatch, "action table size mismatch");
    std::vector<bool> seen(points_.size(), false);
    for (Eigen::Index img : table) {
      require(img >= 0 && img < size() && !seen[static_cast<std::size_t>(img)], errc::internal,
              "generator action is not a bijection");
      seen[static_cast<std::size_t>(img)] = true;
    }
  }
}

Eigen::Index GSetModule::act_perm(const Perm& w, Eigen::Index point) const {
  std::vector<int> word = w.reduced_word();
  Eigen::Index p = point;
  for (std::size_t k = word.size(); k-- > 0;) p = act(word[k], p);
  return p;
}

std::vector<std::vector<Eigen::Index>> GSetModule::orbits() const {
  std::vector<std::vector<Eigen::Index>> out;
  std::vector<bool> seen(points_.size(), false);
  for (Eigen::Index s = 0; s < size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Eigen::Index> orbit{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (int i = 1; i < m_; ++i) {
        Eigen::Index img = act(i, orbit[head]);
        if (!seen[static_cast<std::size_t>(img)]) {
          seen[static_cast<std::size_t>(img)] = true;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Perm> GSetModule::point_stabilizer(Eigen::Index point) const {
  std::vector<Perm> out;
  for (const Perm& w : all_perms(m_))
    if (act_perm(w, point) == point) out.push_back(w);
  return out;
}

std::optional<Partition> GSetModule::stabilizer_young_type(Eigen::Index point) const {
  std::vector<Perm> stab = point_stabilizer(point);
  // orbit blocks of the stabiliser on {1..m}
  std::vector<int> block(static_cast<std::size_t>(m_), -1);
  std::vector<int> sizes;
  for (int x = 0; x < m_; ++x) {
    if (block[static_cast<std::size_t>(x)] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    std::vector<int> queue{x};
    block[static_cast<std::size_t>(x)] = id;
    int cnt = 0;
    while (!queue.empty()) {
      int y = queue.back();
      queue.pop_back();
      ++cnt;
      for (const Perm& w : stab) {
        int z = w.apply(y);
        if (block[static_cast<std::size_t>(z)] < 0) {
          block[static_cast<std::size_t>(z)] = id;
          queue.push_back(z);
        }
      }
    }
    sizes.push_back(cnt);
  }
  long young_order = 1;
  for (int s : sizes) young_order *= factorial(s);
  if (young_order != static_cast<long>(stab.size())) return std::nullopt;
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return Partition(sizes);
}

std::optional<PartitionSet> GSetModule::zeta_profile() const {
  PartitionSet zeta(m_);
  for (const auto& orbit : orbits()) {
    auto type = stabilizer_young_type(orbit.front());
    if (!type) return std::nullopt;
    zeta.insert(*type);
  }
  return zeta;
}

std::optional<std::vector<std::pair<Partition, std::vector<Eigen::Index>>>>
GSetModule::young_layout() const {
  std::vector<std::pair<Partition, std::vector<Eigen::Index>>> out;
  for (const auto& orbit : orbits()) {
    auto type = stabilizer_young_type(orbit.front());
    if (!type) return std::nullopt;
    const Partition& lambda = *type;
    // a base point whose stabiliser is the standard Young subgroup itself
    std::vector<Perm> young = young_subgroup(Composition(lambda));
    std::set<Perm> young_set(young.begin(), young.end());
    Eigen::Index base = -1;
    for (Eigen::Index p : orbit) {
      std::vector<Perm> stab = point_stabilizer(p);
      if (stab.size() != young.size()) continue;
      bool equal = true;
      for (const Perm& w : stab)
        if (!young_set.count(w)) {
          equal = false;
          break;
        }
      if (equal) {
        base = p;
        break;
      }
    }
    if (base < 0) return std::nullopt;
    std::vector<Eigen::Index> ordered;
    std::set<Eigen::Index> used;
    for (const Perm& w : min_coset_reps(lambda)) {
      Eigen::Index p = act_perm(w, base);
      if (!used.insert(p).second) return std::nullopt;
      ordered.push_back(p);
    }
    if (ordered.size() != orbit.size()) return std::nullopt;
    out.emplace_back(lambda, std::move(ordered));
  }
  return out;
}

GSetModule coset_space_module(int m, const std::vector<Perm>& subgroup_generators) {
  std::vector<Perm> subgroup = subgroup_closure(m, subgroup_generators);
  auto coset_label = [&](const Perm& g) {
    // lexicographically minimal element of g T, as one-line images
    std::vector<int> best;
    for (const Perm& t : subgroup) {
      std::vector<int> cand = (g * t).images();
      if (best.empty() || cand < best) best = cand;
    }
    return best;
  };

  // breadth-first orbit closure from the identity coset
  std::vector<std::vector<int>> discovered;
  std::set<std::vector<int>> seen;
  discovered.push_back(coset_label(Perm::identity(m)));
  seen.insert(discovered.front());
  for (std::size_t head = 0; head < discovered.size(); ++head) {
    for (int i = 1; i < m; ++i) {
      Perm g(discovered[head]);
      std::vector<int> img = coset_label(Perm::adjacent(m, i) * g);
      if (seen.insert(img).second) discovered.push_back(img);
    }
  }
  std::vector<std::vector<int>> points(seen.begin(), seen.end());
  std::map<std::vector<int>, Eigen::Index> index;
  for (std::size_t k = 0; k < points.size(); ++k) index[points[k]] = static_cast<Eigen::Index>(k);
  std::vector<std::vector<Eigen::Index>> tables;
  for (int i = 1; i < m; ++i) {
    std::vector<Eigen::Index> table(points.size());
    for (std::size_t k = 0; k < points.size(); ++k)
      table[k] = index.at(coset_label(Perm::adjacent(m, i) * Perm(points[k])));
    tables.push_back(std::move(table));
  }
  return GSetModule(m, std::move(points), std::move(tables));
}

GSetModule tensor_space_module(int n, int r, int m) {
  require(n >= 1 && r >= 1, errc::range_error, "need n, r >= 1");
  require(1 <= m && m <= n, errc::range_error, "need 1 <= m <= n");
  std::vector<std::vector<int>> points;
  std::vector<int> tuple(static_cast<std::size_t>(r), 0);
  for (;;) {
    points.push_back(tuple);
    int k = r - 1;
    while (k >= 0 && tuple[static_cast<std::size_t>(k)] == n - 1) {
      tuple[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    ++tuple[static_cast<std::size_t>(k)];
  }
  std::map<std::vector<int>, Eigen::Index> index;
  for (std::size_t k = 0; k < points.size(); ++k) index[points[k]] = static_cast<Eigen::Index>(k);
  std::vector<std::vector<Eigen::Index>> tables;
  for (int i = 1; i < m; ++i) {
    Perm si = Perm::adjacent(m, i);
    std::vector<Eigen::Index> table(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      std::vector<int> img = points[k];
      for (int& v : img)
        if (v < m) v = si.apply(v);
      table[k] = index.at(img);
    }
    tables.push_back(std::move(table));
  }
  return GSetModule(m, std::move(points), std::move(tables));
}

TensorProfile tensor_orbit_profile(int n, int r, int m) {
  GSetModule x = tensor_space_module(n, r, m);
  auto zeta = x.zeta_profile();
  require(zeta.has_value(), errc::internal, "tensor stabilisers must be Young subgroups");
  TensorProfile out{*zeta, 0};
  bool first = true;
  for (const Partition& lambda : out.zeta.members()) {
    require(lambda.is_hook(), errc::internal, "tensor stabiliser types must be hooks");
    int a = lambda.hook_arm();
    if (first || a < out.idx) out.idx = a;
    first = false;
  }
  return out;
}

}  // namespace heckelab
