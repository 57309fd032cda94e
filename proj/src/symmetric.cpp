#include "heckelab/group/symmetric.hpp"

#include <algorithm>
#include <set>

namespace heckelab {

std::vector<int> j_set(const Composition& alpha) {
  std::vector<int> out;
  int prefix = 0;
  for (int part : alpha.parts()) {
    for (int i = prefix + 1; i < prefix + part; ++i) out.push_back(i);
    prefix += part;
  }
  return out;
}

std::vector<Perm> young_subgroup(const Composition& alpha) {
  int n = alpha.degree();
  // block id per 0-based position
  std::vector<int> block(static_cast<std::size_t>(n));
  int prefix = 0, id = 0;
  for (int part : alpha.parts()) {
    for (int i = 0; i < part; ++i) block[static_cast<std::size_t>(prefix + i)] = id;
    prefix += part;
    ++id;
  }
  std::vector<Perm> out;
  for (const Perm& w : all_perms(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = block[static_cast<std::size_t>(w.apply(i))] == block[static_cast<std::size_t>(i)];
    if (ok) out.push_back(w);
  }
  long expect = 1;
  for (int part : alpha.parts()) expect *= factorial(part);
  require(static_cast<long>(out.size()) == expect, errc::internal, "Young subgroup size mismatch");
  return out;
}

bool is_min_coset_rep(const Perm& w, const Partition& lambda) {
  require(w.size() == lambda.degree(), errc::degree_mismatch, "rank/degree mismatch");
  for (int i : j_set(Composition(lambda)))
    if (w.apply(i - 1) > w.apply(i)) return false;
  return true;
}

std::vector<Perm> min_coset_reps(const Partition& lambda) {
  std::vector<Perm> out;
  for (const Perm& w : all_perms(lambda.degree()))
    if (is_min_coset_rep(w, lambda)) out.push_back(w);
  std::sort(out.begin(), out.end(), [](const Perm& a, const Perm& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a < b;
  });
  long expect = factorial(lambda.degree());
  for (int part : lambda.parts()) expect /= factorial(part);
  require(static_cast<long>(out.size()) == expect, errc::internal, "|D_lambda| mismatch");
  return out;
}

CosetFactorisation coset_factorise(const Perm& w, const Partition& lambda) {
  require(w.size() == lambda.degree(), errc::degree_mismatch, "rank/degree mismatch");
  // sigma permutes positions within each block so that w∘sigma ascends there
  std::vector<int> sigma(static_cast<std::size_t>(w.size()));
  int prefix = 0;
  for (int part : lambda.parts()) {
    std::vector<int> pos(static_cast<std::size_t>(part));
    for (int k = 0; k < part; ++k) pos[static_cast<std::size_t>(k)] = prefix + k;
    std::sort(pos.begin(), pos.end(), [&](int a, int b) { return w.apply(a) < w.apply(b); });
    for (int k = 0; k < part; ++k) sigma[static_cast<std::size_t>(prefix + k)] = pos[static_cast<std::size_t>(k)];
    prefix += part;
  }
  Perm s(std::move(sigma));
  Perm d = w * s;
  Perm v = s.inverse();
  require(is_min_coset_rep(d, lambda), errc::internal, "factorisation left D_lambda");
  require(d.length() + v.length() == w.length(), errc::internal, "lengths not additive");
  return {d, v};
}

std::vector<Perm> subgroup_closure(int m, const std::vector<Perm>& generators) {
  std::set<Perm> seen;
  std::vector<Perm> queue{Perm::identity(m)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Perm g = queue.back();
    queue.pop_back();
    for (const Perm& s : generators) {
      require(s.size() == m, errc::rank_mismatch, "generator degree mismatch");
      Perm h = s * g;
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

}  // namespace heckelab
