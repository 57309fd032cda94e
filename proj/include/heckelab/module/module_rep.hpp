#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "heckelab/combin/partition.hpp"
#include "heckelab/group/symmetric.hpp"
#include "heckelab/hecke/element.hpp"
#include "heckelab/scalar/eigen_support.hpp"
#include "heckelab/scalar/traits.hpp"
#include "heckelab/util/error.hpp"

namespace heckelab {

struct Summand {
  Partition lambda;
  bool is_signed = false;
  Eigen::Index offset = 0;
  Eigen::Index dim = 0;
};

// A left Hec(n)-module given by the action matrices of the generators T_i,
// with column s of rho(T_i) holding the image of the s-th basis vector.
// Modules assembled from Young/signed-Young summands carry the summand
// layout; each summand's basis is T_w g, w running over D_lambda in the
// (length, lex) order, with g the summand generator at the block offset.
template <class F>
class ModuleRep {
 public:
  ModuleRep(int n, F q, Eigen::Index dim, std::vector<DenseMatrix<F>> generator_actions,
            std::vector<Summand> summands = {}, std::vector<std::string> labels = {})
      : n_(n),
        q_(std::move(q)),
        dim_(dim),
        gen_(std::move(generator_actions)),
        summands_(std::move(summands)),
        labels_(std::move(labels)),
        cache_(std::make_shared<Cache>()) {
    require(static_cast<int>(gen_.size()) == n_ - 1, errc::rank_mismatch,
            "need one action matrix per generator");
    for (const auto& g : gen_)
      require(g.rows() == dim_ && g.cols() == dim_, errc::shape_mismatch,
              "action matrices must be dim x dim");
  }

  int rank() const { return n_; }
  const F& q() const { return q_; }
  Eigen::Index dim() const { return dim_; }
  const std::vector<Summand>& summands() const { return summands_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // action of T_i, generator index 1-based
  const DenseMatrix<F>& generator_action(int i) const {
    require(i >= 1 && i < n_, errc::range_error, "generator index out of range");
    return gen_[static_cast<std::size_t>(i - 1)];
  }

  // rho(T_w), derived along a reduced word and memoized (write-once per w).
  std::shared_ptr<const DenseMatrix<F>> action(const Perm& w) const {
    require(w.size() == n_, errc::rank_mismatch, "permutation degree != rank");
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->map.find(w);
      if (it != cache_->map.end()) return it->second;
    }
    DenseMatrix<F> m(dim_, dim_);
    m.setConstant(F(0));
    for (Eigen::Index i = 0; i < dim_; ++i) m(i, i) = F(1);
    std::vector<int> word = w.reduced_word();
    for (std::size_t k = word.size(); k-- > 0;)
      m = generator_action(word[k]) * m;
    auto ptr = std::make_shared<const DenseMatrix<F>>(std::move(m));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->map.try_emplace(w, ptr);
    return it->second;
  }

  // rho(T_w) for every w in Sym(n), indexed by perm_index; filled along
  // length order so each matrix costs a single generator product.
  std::vector<std::shared_ptr<const DenseMatrix<F>>> all_actions() const {
    std::vector<Perm> perms = all_perms(n_);
    std::vector<std::size_t> order(perms.size());
    for (std::size_t k = 0; k < perms.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return perms[a].length() < perms[b].length();
    });
    std::vector<std::shared_ptr<const DenseMatrix<F>>> out(perms.size());
    for (std::size_t k : order) {
      const Perm& w = perms[k];
      {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->map.find(w);
        if (it != cache_->map.end()) {
          out[k] = it->second;
          continue;
        }
      }
      std::shared_ptr<const DenseMatrix<F>> ptr;
      if (w.is_identity()) {
        ptr = action(w);
      } else {
        int i = 1;
        while (w.left_mult_lengthens(i)) ++i;
        Perm shorter = Perm::adjacent(n_, i) * w;
        auto prev = out[perm_index(shorter)];
        require(prev != nullptr, errc::internal, "length order broken in all_actions");
        DenseMatrix<F> m = generator_action(i) * (*prev);
        ptr = std::make_shared<const DenseMatrix<F>>(std::move(m));
        std::lock_guard<std::mutex> lock(cache_->mu);
        ptr = cache_->map.try_emplace(w, ptr).first->second;
      }
      out[k] = ptr;
    }
    return out;
  }

  DenseMatrix<F> action_of(const HeckeElement<F>& h) const {
    require(h.rank() == n_, errc::rank_mismatch, "element rank != module rank");
    require(h.q() == q_, errc::mixed_parameters, "element parameter != module parameter");
    DenseMatrix<F> m(dim_, dim_);
    m.setConstant(F(0));
    for (const auto& [w, c] : h.coeffs()) m += c * (*action(w));
    return m;
  }

  // quadratic relation T_i^2 = (q-1) T_i + q and both braid relations
  void validate_relations() const {
    DenseMatrix<F> id(dim_, dim_);
    id.setConstant(F(0));
    for (Eigen::Index i = 0; i < dim_; ++i) id(i, i) = F(1);
    for (int i = 1; i < n_; ++i) {
      const auto& ti = generator_action(i);
      DenseMatrix<F> lhs = ti * ti;
      DenseMatrix<F> rhs = (q_ - F(1)) * ti + q_ * id;
      require(lhs == rhs, errc::internal, "quadratic relation fails");
    }
    for (int i = 1; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        const auto& a = generator_action(i);
        const auto& b = generator_action(j);
        if (j == i + 1) {
          DenseMatrix<F> lhs = a * b * a;
          DenseMatrix<F> rhs = b * a * b;
          require(lhs == rhs, errc::internal, "braid relation fails");
        } else {
          DenseMatrix<F> lhs = a * b;
          DenseMatrix<F> rhs = b * a;
          require(lhs == rhs, errc::internal, "commuting relation fails");
        }
      }
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<Perm, std::shared_ptr<const DenseMatrix<F>>> map;
  };

  int n_;
  F q_;
  Eigen::Index dim_;
  std::vector<DenseMatrix<F>> gen_;
  std::vector<Summand> summands_;
  std::vector<std::string> labels_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {

// Action of T_i on the coset basis {T_w g : w in D_lambda} where the
// generator satisfies T_j g = eig * g for j in J(lambda); eig is q for the
// plain module and -1 for the signed one.
template <class F>
DenseMatrix<F> coset_generator_action(const Partition& lambda, const std::vector<Perm>& reps,
                                      const std::map<Perm, Eigen::Index>& index, int i, const F& q,
                                      const F& eig) {
  const Eigen::Index d = static_cast<Eigen::Index>(reps.size());
  DenseMatrix<F> m(d, d);
  m.setConstant(F(0));
  const int n = lambda.degree();
  Perm si = Perm::adjacent(n, i);
  for (Eigen::Index col = 0; col < d; ++col) {
    const Perm& dperm = reps[static_cast<std::size_t>(col)];
    Perm sd = si * dperm;
    auto reduce = [&](const Perm& w, const F& scale) {
      auto [dp, v] = coset_factorise(w, lambda);
      m(index.at(dp), col) += scale * scalar_pow(eig, v.length());
    };
    if (dperm.left_mult_lengthens(i)) {
      reduce(sd, F(1));
    } else {
      reduce(sd, q);
      m(col, col) += q - F(1);
    }
  }
  return m;
}

template <class F>
ModuleRep<F> build_coset_module(const Partition& lambda, F q, bool is_signed) {
  require(lambda.degree() >= 1, errc::invalid_partition, "need a partition of n >= 1");
  require(!is_zero(q), errc::zero_parameter, "parameter must be a unit");
  const int n = lambda.degree();
  std::vector<Perm> reps = min_coset_reps(lambda);
  std::map<Perm, Eigen::Index> index;
  for (std::size_t k = 0; k < reps.size(); ++k) index[reps[k]] = static_cast<Eigen::Index>(k);
  F eig = is_signed ? F(-1) : q;
  std::vector<DenseMatrix<F>> gens;
  for (int i = 1; i < n; ++i)
    gens.push_back(coset_generator_action(lambda, reps, index, i, q, eig));
  Summand s{lambda, is_signed, 0, static_cast<Eigen::Index>(reps.size())};
  std::vector<std::string> labels;
  for (const Perm& w : reps)
    labels.push_back((is_signed ? std::string("T") : std::string("T")) + to_string(w) +
                     (is_signed ? "*y" : "*x") + to_string(lambda));
  return ModuleRep<F>(n, std::move(q), s.dim, std::move(gens), {s}, std::move(labels));
}

}  // namespace detail

template <class F>
ModuleRep<F> build_young_module(const Partition& lambda, F q) {
  return detail::build_coset_module(lambda, std::move(q), false);
}

template <class F>
ModuleRep<F> build_signed_module(const Partition& lambda, F q) {
  return detail::build_coset_module(lambda, std::move(q), true);
}

struct SummandSpec {
  Partition lambda;
  int multiplicity = 1;
  bool is_signed = false;
};

template <class F>
ModuleRep<F> direct_sum(const std::vector<SummandSpec>& parts, F q) {
  require(!parts.empty(), errc::invalid_partition, "empty direct sum");
  const int n = parts.front().lambda.degree();
  std::vector<ModuleRep<F>> pieces;
  std::vector<Summand> summands;
  std::vector<std::string> labels;
  Eigen::Index total = 0;
  for (const auto& p : parts) {
    require(p.lambda.degree() == n, errc::mixed_parameters, "summands of different degree");
    require(p.multiplicity >= 1, errc::mixed_parameters, "multiplicity must be >= 1");
    ModuleRep<F> piece =
        p.is_signed ? build_signed_module<F>(p.lambda, q) : build_young_module<F>(p.lambda, q);
    for (int c = 0; c < p.multiplicity; ++c) {
      summands.push_back({p.lambda, p.is_signed, total, piece.dim()});
      for (const auto& l : piece.labels()) labels.push_back(l);
      total += piece.dim();
    }
    pieces.push_back(std::move(piece));
  }
  std::vector<DenseMatrix<F>> gens;
  for (int i = 1; i < n; ++i) {
    DenseMatrix<F> g(total, total);
    g.setConstant(F(0));
    Eigen::Index at = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const auto& block = pieces[k].generator_action(i);
      for (int c = 0; c < parts[k].multiplicity; ++c) {
        g.block(at, at, block.rows(), block.cols()) = block;
        at += block.rows();
      }
    }
    gens.push_back(std::move(g));
  }
  return ModuleRep<F>(n, std::move(q), total, std::move(gens), std::move(summands),
                      std::move(labels));
}

struct ZetaIndex {
  PartitionSet zeta;
  std::optional<int> idx;
};

template <class F>
ZetaIndex zeta_and_index(const ModuleRep<F>& m) {
  require(!m.summands().empty(), errc::not_a_young_sum,
          "module carries no Young summand description");
  PartitionSet zeta(m.rank());
  bool all_hooks = true;
  std::optional<int> idx;
  for (const Summand& s : m.summands()) {
    require(!s.is_signed, errc::not_a_young_sum, "zeta of a signed sum not defined here");
    zeta.insert(s.lambda);
    if (s.lambda.is_hook()) {
      int a = s.lambda.hook_arm();
      if (!idx || a < *idx) idx = a;
    } else {
      all_hooks = false;
    }
  }
  if (!all_hooks) idx.reset();
  return {zeta, idx};
}

}  // namespace heckelab
