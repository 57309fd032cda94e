#include "heckelab/combin/partition.hpp"

#include <algorithm>
#include <numeric>

namespace heckelab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] > 0, errc::invalid_partition, "parts must be positive");
    if (i > 0)
      require(parts_[i - 1] >= parts_[i], errc::invalid_partition, "parts must be weakly decreasing");
  }
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int c = 0; rows() > 0 && c < parts_[0]; ++c) {
    int cnt = 0;
    for (int r : parts_)
      if (r > c) ++cnt;
    t.push_back(cnt);
  }
  return Partition(std::move(t));
}

bool Partition::is_hook() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] != 1) return false;
  return !parts_.empty();
}

int Partition::hook_arm() const {
  require(is_hook(), errc::not_a_hook_sum, to_string(*this) + " is not a hook");
  return parts_[0];
}

bool canon_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                      a.parts_.end());
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_) require(x >= 0, errc::invalid_partition, "composition parts must be >= 0");
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Composition::to_partition() const {
  std::vector<int> p;
  for (int x : parts_)
    if (x > 0) p.push_back(x);
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(std::move(p));
}

PartitionSet::PartitionSet(int n, std::vector<Partition> members) : n_(n) {
  for (auto& p : members) insert(p);
}

bool PartitionSet::contains(const Partition& p) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), p,
                             [](const Partition& a, const Partition& b) { return canon_less(a, b); });
  return it != members_.end() && *it == p;
}

void PartitionSet::insert(const Partition& p) {
  require(p.degree() == n_, errc::degree_mismatch,
          "partition " + to_string(p) + " has degree != " + std::to_string(n_));
  auto it = std::lower_bound(members_.begin(), members_.end(), p,
                             [](const Partition& a, const Partition& b) { return canon_less(a, b); });
  if (it == members_.end() || !(*it == p)) members_.insert(it, p);
}

namespace {
void enumerate_partitions(int remaining, int max_part, std::vector<int>& acc,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    acc.push_back(k);
    enumerate_partitions(remaining - k, k, acc, out);
    acc.pop_back();
  }
}
}  // namespace

PartitionSet partitions_of(int n) {
  require(n >= 0, errc::range_error, "partitions_of needs n >= 0");
  std::vector<Partition> all;
  std::vector<int> acc;
  enumerate_partitions(n, n == 0 ? 1 : n, acc, all);
  if (n == 0) all.emplace_back(std::vector<int>{});
  return PartitionSet(n, std::move(all));
}

bool dominance_leq(const Partition& a, const Partition& b) {
  require(a.degree() == b.degree(), errc::degree_mismatch, "dominance needs equal degrees");
  int pa = 0, pb = 0;
  int rows = std::max(a.rows(), b.rows());
  for (int r = 0; r < rows; ++r) {
    pa += a.part(r);
    pb += b.part(r);
    if (pa > pb) return false;
  }
  return true;
}

PartitionSet coarsening_closure(const PartitionSet& sigma) {
  PartitionSet out(sigma.degree());
  std::vector<Partition> queue = sigma.members();
  for (const auto& p : queue) out.insert(p);
  while (!queue.empty()) {
    Partition p = queue.back();
    queue.pop_back();
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        std::vector<int> merged;
        for (std::size_t k = 0; k < parts.size(); ++k)
          if (k != i && k != j) merged.push_back(parts[k]);
        merged.push_back(parts[i] + parts[j]);
        std::sort(merged.begin(), merged.end(), std::greater<int>());
        Partition q(std::move(merged));
        if (!out.contains(q)) {
          out.insert(q);
          queue.push_back(q);
        }
      }
    }
  }
  return out;
}

PartitionSet dominance_upward_closure(const PartitionSet& sigma) {
  PartitionSet out(sigma.degree());
  const PartitionSet all = partitions_of(sigma.degree());
  for (const Partition& mu : all.members())
    for (const Partition& lam : sigma.members())
      if (dominance_leq(lam, mu)) {
        out.insert(mu);
        break;
      }
  return out;
}

bool is_cosaturated(const PartitionSet& sigma) { return dominance_upward_closure(sigma) == sigma; }

PartitionSet set_complement(const PartitionSet& sigma) {
  PartitionSet out(sigma.degree());
  const PartitionSet all = partitions_of(sigma.degree());
  for (const Partition& p : all.members())
    if (!sigma.contains(p)) out.insert(p);
  return out;
}

PartitionSet set_union(const PartitionSet& a, const PartitionSet& b) {
  require(a.degree() == b.degree(), errc::degree_mismatch, "union of sets of different degree");
  PartitionSet out = a;
  for (const Partition& p : b.members()) out.insert(p);
  return out;
}

}  // namespace heckelab
