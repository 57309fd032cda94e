#pragma once

#include <optional>
#include <vector>

#include "heckelab/combin/partition.hpp"
#include "heckelab/group/symmetric.hpp"
#include "heckelab/module/module_rep.hpp"

namespace heckelab {

// Finite Sym(m)-set with the generator actions tabulated on points.
class GSetModule {
 public:
  GSetModule(int m, std::vector<std::vector<int>> points,
             std::vector<std::vector<Eigen::Index>> generator_actions);

  int degree() const { return m_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(points_.size()); }
  const std::vector<std::vector<int>>& points() const { return points_; }
  // image of point index under s_i, generator index 1-based
  Eigen::Index act(int i, Eigen::Index point) const {
    return gen_act_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(point)];
  }
  Eigen::Index act_perm(const Perm& w, Eigen::Index point) const;

  std::vector<std::vector<Eigen::Index>> orbits() const;

  // stabiliser subgroup of a point inside Sym(m)
  std::vector<Perm> point_stabilizer(Eigen::Index point) const;
  // partition of m by the stabiliser's orbit blocks, when the stabiliser is a
  // Young subgroup; nullopt otherwise
  std::optional<Partition> stabilizer_young_type(Eigen::Index point) const;

  // stabiliser types, one per orbit (all points of an orbit share the type)
  std::optional<PartitionSet> zeta_profile() const;

  // Permutation-matrix module in point order, without summand structure.
  template <class F>
  ModuleRep<F> to_module_rep() const {
    const Eigen::Index d = size();
    std::vector<DenseMatrix<F>> gens;
    for (int i = 1; i < m_; ++i) {
      DenseMatrix<F> g(d, d);
      g.setConstant(F(0));
      for (Eigen::Index s = 0; s < d; ++s) g(act(i, s), s) = F(1);
      gens.push_back(std::move(g));
    }
    std::vector<std::string> labels;
    for (const auto& pt : points_) {
      std::string l = "<";
      for (std::size_t k = 0; k < pt.size(); ++k) l += (k ? "," : "") + std::to_string(pt[k] + 1);
      labels.push_back(l + ">");
    }
    return ModuleRep<F>(m_, F(1), d, std::move(gens), {}, std::move(labels));
  }

  // Isomorphic Young-sum module at q = 1: one summand per orbit, basis
  // reordered so each orbit reads w * x0, w over D_lambda, where x0 has the
  // standard Young subgroup of its type as its exact stabiliser. Available
  // only when every stabiliser is a Young subgroup.
  template <class F>
  std::optional<ModuleRep<F>> to_young_module_rep() const {
    auto layout = young_layout();
    if (!layout) return std::nullopt;
    const Eigen::Index d = size();
    std::vector<Summand> summands;
    std::vector<Eigen::Index> order;  // new basis -> point index
    for (const auto& [lambda, pts] : *layout) {
      summands.push_back({lambda, false, static_cast<Eigen::Index>(order.size()),
                          static_cast<Eigen::Index>(pts.size())});
      for (Eigen::Index p : pts) order.push_back(p);
    }
    std::vector<Eigen::Index> inv(static_cast<std::size_t>(d));
    for (std::size_t k = 0; k < order.size(); ++k) inv[static_cast<std::size_t>(order[k])] =
        static_cast<Eigen::Index>(k);
    std::vector<DenseMatrix<F>> gens;
    for (int i = 1; i < m_; ++i) {
      DenseMatrix<F> g(d, d);
      g.setConstant(F(0));
      for (Eigen::Index s = 0; s < d; ++s)
        g(inv[static_cast<std::size_t>(act(i, order[static_cast<std::size_t>(s)]))], s) = F(1);
      gens.push_back(std::move(g));
    }
    return ModuleRep<F>(m_, F(1), d, std::move(gens), std::move(summands));
  }

  // (lambda, points ordered as T_w x0 over D_lambda) per orbit, or nullopt if
  // some stabiliser is not Young.
  std::optional<std::vector<std::pair<Partition, std::vector<Eigen::Index>>>> young_layout() const;

 private:
  int m_;
  std::vector<std::vector<int>> points_;
  std::vector<std::vector<Eigen::Index>> gen_act_;
};

// Cosets Sym(m)/T for the subgroup generated by the given elements,
// enumerated by breadth-first orbit closure from the identity coset, points
// then canonically sorted.
GSetModule coset_space_module(int m, const std::vector<Perm>& subgroup_generators);

// All r-tuples over {1..n} with Sym(m) acting entrywise (m <= n).
GSetModule tensor_space_module(int n, int r, int m);

struct TensorProfile {
  PartitionSet zeta;
  int idx = 0;
};

// Stabiliser-type profile of Sym(m) acting on I(n,r), computed by direct
// orbit analysis.
TensorProfile tensor_orbit_profile(int n, int r, int m);

}  // namespace heckelab
