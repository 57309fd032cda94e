#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/linalg/rref.hpp"
#include "heckelab/linalg/smith.hpp"
#include "heckelab/linalg/subspace.hpp"
#include "heckelab/module/module_rep.hpp"
#include "heckelab/util/rng.hpp"

namespace heckelab {

// ---------------------------------------------------------------------------
// Annihilators, endomorphism algebras and double centralisers of Hec(n)
// modules, all by explicit exact linear algebra.
//
// Conventions: the algebra ambient is F^{n!} in the lexicographic T_w order;
// matrix ambients are vec'd row-major, vec(M)[r*cols + c] = M(r, c).
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
DenseVector<F> vec_of(const DenseMatrix<F>& m) {
  DenseVector<F> v(m.rows() * m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

template <class F>
DenseMatrix<F> unvec(const DenseVector<F>& v, Eigen::Index rows, Eigen::Index cols) {
  DenseMatrix<F> m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = v(r * cols + c);
  return m;
}

// Columns index the T_w basis; column w is vec(rho(T_w)).
template <class F>
DenseMatrix<F> action_system(const ModuleRep<F>& p) {
  auto actions = p.all_actions();
  const Eigen::Index d = p.dim();
  DenseMatrix<F> a(d * d, static_cast<Eigen::Index>(actions.size()));
  for (std::size_t w = 0; w < actions.size(); ++w)
    a.col(static_cast<Eigen::Index>(w)) = vec_of(*actions[w]);
  return a;
}

// Maintains a reduced row echelon basis, one appended row at a time.
template <class F>
class IncrementalRref {
 public:
  explicit IncrementalRref(Eigen::Index width) : width_(width) {}

  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index width() const { return width_; }

  // Reduce v against the current basis in place; returns true if the residue
  // is nonzero (and absorbs it as a new basis row).
  bool add_row(DenseVector<F> v) {
    reduce(v);
    Eigen::Index lead = first_nonzero(v);
    if (lead < 0) return false;
    F piv = inv(v(lead));
    for (Eigen::Index j = lead; j < width_; ++j) v(j) = v(j) * piv;
    for (auto& [l, row] : rows_)
      if (!is_zero(row(lead))) {
        F f = row(lead);
        for (Eigen::Index j = lead; j < width_; ++j) row(j) = row(j) - f * v(j);
      }
    rows_.emplace_back(lead, std::move(v));
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }

  void reduce(DenseVector<F>& v) const {
    for (const auto& [lead, row] : rows_) {
      if (is_zero(v(lead))) continue;
      F f = v(lead);
      for (Eigen::Index j = lead; j < width_; ++j) v(j) = v(j) - f * row(j);
    }
  }

  bool contains(DenseVector<F> v) const {
    reduce(v);
    return first_nonzero(v) < 0;
  }

  DenseMatrix<F> basis() const {
    DenseMatrix<F> b(rank(), width_);
    for (std::size_t k = 0; k < rows_.size(); ++k) b.row(static_cast<Eigen::Index>(k)) =
        rows_[k].second.transpose();
    return b;
  }

 private:
  Eigen::Index first_nonzero(const DenseVector<F>& v) const {
    for (Eigen::Index j = 0; j < width_; ++j)
      if (!is_zero(v(j))) return j;
    return -1;
  }
  Eigen::Index width_;
  std::vector<std::pair<Eigen::Index, DenseVector<F>>> rows_;  // (pivot, row)
};

}  // namespace detail

// A basis element of End(P) localized to one summand pair: a map from block
// `from` into block `to`.
template <class F>
struct BlockHom {
  std::size_t from = 0, to = 0;
  DenseMatrix<F> phi;  // dim(to) x dim(from)
};

template <class F>
struct EndStructure {
  std::vector<Summand> layout;  // blocks the homs refer to
  std::vector<BlockHom<F>> homs;
  Eigen::Index dim() const { return static_cast<Eigen::Index>(homs.size()); }

  DenseMatrix<F> embedded(std::size_t k, Eigen::Index total_dim) const {
    const BlockHom<F>& h = homs[k];
    DenseMatrix<F> m(total_dim, total_dim);
    m.setConstant(F(0));
    m.block(layout[h.to].offset, layout[h.from].offset, h.phi.rows(), h.phi.cols()) = h.phi;
    return m;
  }
};

struct CentraliserReport {
  std::string module_desc;
  std::string domain_desc;
  Eigen::Index dim_ann = 0;
  Eigen::Index dim_end = 0;
  Eigen::Index dim_dend = 0;
  Eigen::Index dim_image = 0;
  bool dc_holds = false;
};

struct IntegralAnnihilator {
  IntegerLattice lattice;
  std::vector<Integer> divisors;
  std::vector<std::uint64_t> failing_primes;  // primes dividing some divisor, up to 7
};

// ---------------------------------------------------------------------------

template <class F>
class CentraliserContext {
 public:
  // ---- annihilator ---------------------------------------------------------

  Subspace<F> annihilator(const ModuleRep<F>& p) {
    static_assert(is_field_v<F>, "annihilator needs field scalars");
    DenseMatrix<F> sys = detail::action_system(p);
    Subspace<F> ann(sys.cols(), nullspace(sys));
    ideal_sanity(p, ann);
    return ann;
  }

  // ---- endomorphism algebra ------------------------------------------------

  EndStructure<F> end_structure(const ModuleRep<F>& p) {
    EndStructure<F> out;
    if (!p.summands().empty()) {
      verify_block_layout(p);
      out.layout = p.summands();
      for (std::size_t j = 0; j < out.layout.size(); ++j)
        for (std::size_t i = 0; i < out.layout.size(); ++i)
          for (const auto& phi : hom_block(p, i, j)) out.homs.push_back({i, j, phi});
      verify_equivariance(p, out);
      return out;
    }
    // single untyped block: solve the commuting system over the generators
    out.layout = {Summand{Partition(), false, 0, p.dim()}};
    DenseMatrix<F> sol = nullspace(commuting_system(p));
    for (Eigen::Index r = 0; r < sol.rows(); ++r)
      out.homs.push_back({0, 0, detail::unvec<F>(sol.row(r).transpose(), p.dim(), p.dim())});
    return out;
  }

  Subspace<F> end_algebra(const ModuleRep<F>& p) {
    EndStructure<F> s = end_structure(p);
    const Eigen::Index d = p.dim();
    DenseMatrix<F> rows(s.dim(), d * d);
    for (std::size_t k = 0; k < s.homs.size(); ++k)
      rows.row(static_cast<Eigen::Index>(k)) = detail::vec_of(s.embedded(k, d)).transpose();
    Subspace<F> out = Subspace<F>::from_span(rows);
    require(out.dim() == s.dim(), errc::internal, "End basis is not independent");
    if (d <= 16) assert_product_closed(out, d);
    return out;
  }

  // ---- double centraliser --------------------------------------------------

  // Commutant of the span of the given d x d matrices inside Mat_d.
  Subspace<F> matrix_commutant(Eigen::Index d, const std::vector<DenseMatrix<F>>& gens) {
    std::vector<DenseMatrix<F>> basis = commutant_basis(d, gens);
    DenseMatrix<F> rows(static_cast<Eigen::Index>(basis.size()), d * d);
    for (std::size_t k = 0; k < basis.size(); ++k)
      rows.row(static_cast<Eigen::Index>(k)) = detail::vec_of(basis[k]).transpose();
    return Subspace<F>::from_span(rows);
  }

  Subspace<F> double_end(const ModuleRep<F>& p, const Subspace<F>& end_basis) {
    const Eigen::Index d = p.dim();
    require(end_basis.ambient() == d * d, errc::basis_mismatch,
            "End basis ambient is not dim^2");
    std::vector<DenseMatrix<F>> gens;
    for (Eigen::Index r = 0; r < end_basis.dim(); ++r)
      gens.push_back(detail::unvec<F>(end_basis.basis().row(r).transpose(), d, d));
    return matrix_commutant(d, gens);
  }

  CentraliserReport dc_check(const ModuleRep<F>& p) {
    CentraliserReport rep;
    rep.module_desc = describe(p);
    rep.domain_desc = scalar_info<F>::name() + ", q = " + to_string(p.q());
    const long n_fact = factorial(p.rank());
    Subspace<F> ann = annihilator(p);
    rep.dim_ann = ann.dim();
    rep.dim_image = n_fact - rep.dim_ann;
    EndStructure<F> es = end_structure(p);
    rep.dim_end = es.dim();
    rep.dim_dend = dend_dimension(p, es);
    rep.dc_holds = (rep.dim_dend == rep.dim_image);
    return rep;
  }

  // Dimension of the commutant of End(P), dispatching on module structure.
  Eigen::Index dend_dimension(const ModuleRep<F>& p, const EndStructure<F>& es) {
    if (has_regular_summand(p)) return regular_dend_dimension(p, &es);
    if (p.summands().size() <= 1) {
      std::vector<DenseMatrix<F>> gens;
      for (std::size_t k = 0; k < es.homs.size(); ++k) gens.push_back(es.homs[k].phi);
      return static_cast<Eigen::Index>(commutant_basis(p.dim(), gens).size());
    }
    return block_dend(p).total_dim;
  }

  // Materialized commutant of End(P) in Mat_d coordinates.
  Subspace<F> double_end_subspace(const ModuleRep<F>& p) {
    const Eigen::Index d = p.dim();
    if (has_regular_summand(p)) {
      // image of the action map: DEnd = im(nu); premises checked in
      // regular_dend_dimension
      (void)regular_dend_dimension(p, nullptr);
      DenseMatrix<F> sys = detail::action_system(p);
      return Subspace<F>::from_span(DenseMatrix<F>(sys.transpose()));
    }
    if (p.summands().size() <= 1) {
      EndStructure<F> es = end_structure(p);
      std::vector<DenseMatrix<F>> gens;
      for (auto& h : es.homs) gens.push_back(h.phi);
      return matrix_commutant(d, gens);
    }
    BlockDend bd = block_dend(p);
    DenseMatrix<F> rows(bd.total_dim, d * d);
    for (Eigen::Index k = 0; k < bd.total_dim; ++k) {
      DenseMatrix<F> sigma(d, d);
      sigma.setConstant(F(0));
      Eigen::Index at = 0;
      for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        const auto& cb = *bd.blocks[i];
        const Summand& s = p.summands()[i];
        DenseMatrix<F> blk(s.dim, s.dim);
        blk.setConstant(F(0));
        for (std::size_t b = 0; b < cb.size(); ++b)
          blk += bd.solutions(k, at + static_cast<Eigen::Index>(b)) * cb[b];
        at += static_cast<Eigen::Index>(cb.size());
        sigma.block(s.offset, s.offset, s.dim, s.dim) = blk;
      }
      rows.row(k) = detail::vec_of(sigma).transpose();
    }
    return Subspace<F>::from_span(rows);
  }

  // ---- integral annihilator (q with integer action tables) ------------------

  static IntegralAnnihilator integral_annihilator_lattice(const ModuleRep<Rational>& p) {
    DenseMatrix<Integer> sys = to_integer(detail::action_system(p));
    SmithResult s = smith_normal_form(sys);
    IntegralAnnihilator out;
    out.lattice = s.kernel;
    out.divisors = s.divisors;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
      Integer qz(static_cast<long>(q));
      for (const Integer& dv : out.divisors)
        if (qz.divides(dv)) {
          out.failing_primes.push_back(q);
          break;
        }
    }
    return out;
  }

 private:
  // ---- hom blocks -----------------------------------------------------------

  struct TypeKey {
    Partition lambda;
    bool is_signed;
    bool operator<(const TypeKey& o) const {
      if (is_signed != o.is_signed) return is_signed < o.is_signed;
      if (lambda == o.lambda) return false;
      return canon_less(lambda, o.lambda);
    }
  };

  static TypeKey key_of(const Summand& s) { return {s.lambda, s.is_signed}; }

  const ModuleRep<F>& standalone(const TypeKey& k, const F& q) {
    auto it = standalone_.find(k);
    if (it != standalone_.end()) return it->second;
    ModuleRep<F> m =
        k.is_signed ? build_signed_module<F>(k.lambda, q) : build_young_module<F>(k.lambda, q);
    return standalone_.emplace(k, std::move(m)).first->second;
  }

  // Basis of Hom(block i -> block j): by Frobenius reciprocity a hom is
  // determined by the image u of the generator of block i, constrained by
  // T_k u = eig_i u for k in J(lambda_i); the matrix has columns rho_j(T_w) u,
  // w over D_{lambda_i}.
  std::vector<DenseMatrix<F>> hom_block(const ModuleRep<F>& p, std::size_t i, std::size_t j) {
    const Summand& si = p.summands()[i];
    const Summand& sj = p.summands()[j];
    const ModuleRep<F>& mj = standalone(key_of(sj), p.q());
    std::vector<int> js = j_set(Composition(si.lambda));
    F eig = si.is_signed ? F(-1) : p.q();

    DenseMatrix<F> eigenbasis;  // rows
    if (js.empty()) {
      eigenbasis.resize(sj.dim, sj.dim);
      eigenbasis.setConstant(F(0));
      for (Eigen::Index r = 0; r < sj.dim; ++r) eigenbasis(r, r) = F(1);
    } else {
      DenseMatrix<F> sys(static_cast<Eigen::Index>(js.size()) * sj.dim, sj.dim);
      for (std::size_t t = 0; t < js.size(); ++t) {
        DenseMatrix<F> blk = mj.generator_action(js[t]);
        for (Eigen::Index r = 0; r < sj.dim; ++r) blk(r, r) -= eig;
        sys.block(static_cast<Eigen::Index>(t) * sj.dim, 0, sj.dim, sj.dim) = blk;
      }
      eigenbasis = nullspace(sys);
    }

    std::vector<Perm> reps = min_coset_reps(si.lambda);
    std::vector<DenseMatrix<F>> out;
    for (Eigen::Index r = 0; r < eigenbasis.rows(); ++r) {
      DenseVector<F> u = eigenbasis.row(r).transpose();
      DenseMatrix<F> phi(sj.dim, si.dim);
      for (std::size_t c = 0; c < reps.size(); ++c)
        phi.col(static_cast<Eigen::Index>(c)) = (*mj.action(reps[c])) * u;
      out.push_back(std::move(phi));
    }
    return out;
  }

  // The generator matrices must be block diagonal for the declared layout and
  // each diagonal block must equal the standalone summand module. Everything
  // downstream (hom blocks, the free-summand shortcut) leans on this.
  void verify_block_layout(const ModuleRep<F>& p) {
    const auto& sm = p.summands();
    Eigen::Index covered = 0;
    for (const Summand& s : sm) {
      require(s.offset == covered, errc::internal, "summand offsets must tile the module");
      covered += s.dim;
    }
    require(covered == p.dim(), errc::internal, "summands do not cover the module");
    for (int g = 1; g < p.rank(); ++g) {
      const DenseMatrix<F>& gen = p.generator_action(g);
      for (const Summand& s : sm) {
        const ModuleRep<F>& st = standalone(key_of(s), p.q());
        require(gen.block(s.offset, s.offset, s.dim, s.dim) == st.generator_action(g),
                errc::internal, "summand block differs from the standalone module");
      }
      for (const Summand& a : sm)
        for (const Summand& b : sm) {
          if (a.offset == b.offset) continue;
          DenseMatrix<F> off = gen.block(a.offset, b.offset, a.dim, b.dim);
          for (Eigen::Index r = 0; r < off.rows(); ++r)
            for (Eigen::Index c = 0; c < off.cols(); ++c)
              require(is_zero(off(r, c)), errc::internal, "module is not block diagonal");
        }
    }
  }

  // Spot-check that the computed homs intertwine the generator actions.
  void verify_equivariance(const ModuleRep<F>& p, const EndStructure<F>& es) {
    Rng rng(0xabcdef);
    for (const auto& h : es.homs) {
      const Summand& si = es.layout[h.from];
      const Summand& sj = es.layout[h.to];
      bool full = si.dim * sj.dim <= 4096;
      for (int g = 1; g < p.rank(); ++g) {
        DenseMatrix<F> gi = p.generator_action(g).block(si.offset, si.offset, si.dim, si.dim);
        DenseMatrix<F> gj = p.generator_action(g).block(sj.offset, sj.offset, sj.dim, sj.dim);
        if (full) {
          require(h.phi * gi == gj * h.phi, errc::internal, "hom is not equivariant");
        } else {
          DenseVector<F> v(si.dim);
          v.setConstant(F(0));
          v(static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(si.dim)))) = F(1);
          require(h.phi * (gi * v) == gj * (h.phi * v), errc::internal,
                  "hom is not equivariant (probe)");
        }
      }
    }
  }

  // Commuting system over the generators: unknown vec(S), constraints
  // S rho(T_i) = rho(T_i) S.
  DenseMatrix<F> commuting_system(const ModuleRep<F>& p) {
    const Eigen::Index d = p.dim();
    DenseMatrix<F> sys(static_cast<Eigen::Index>(p.rank() - 1) * d * d, d * d);
    sys.setConstant(F(0));
    for (int i = 1; i < p.rank(); ++i) {
      const DenseMatrix<F>& c = p.generator_action(i);
      Eigen::Index base = static_cast<Eigen::Index>(i - 1) * d * d;
      for (Eigen::Index u = 0; u < d; ++u)
        for (Eigen::Index s = 0; s < d; ++s) {
          Eigen::Index row = base + u * d + s;
          for (Eigen::Index t = 0; t < d; ++t) {
            sys(row, u * d + t) += c(t, s);
            sys(row, t * d + s) -= c(u, t);
          }
        }
    }
    return sys;
  }

  void assert_product_closed(const Subspace<F>& end, Eigen::Index d) {
    for (Eigen::Index a = 0; a < end.dim(); ++a)
      for (Eigen::Index b = 0; b < end.dim(); ++b) {
        DenseMatrix<F> prod = detail::unvec<F>(end.basis().row(a).transpose(), d, d) *
                              detail::unvec<F>(end.basis().row(b).transpose(), d, d);
        require(end.contains(detail::vec_of(prod)), errc::internal,
                "End is not closed under products");
      }
  }

  // ---- commutant machinery ---------------------------------------------------

  // Exact commutant of a list of matrices: a generic combination first (its
  // kernel already contains the answer), then every individual constraint.
  std::vector<DenseMatrix<F>> commutant_basis(Eigen::Index d,
                                              const std::vector<DenseMatrix<F>>& gens) {
    std::vector<DenseMatrix<F>> basis;
    if (gens.empty()) {
      for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) {
          DenseMatrix<F> e(d, d);
          e.setConstant(F(0));
          e(a, b) = F(1);
          basis.push_back(std::move(e));
        }
      return basis;
    }
    Rng rng(0x5eed);
    DenseMatrix<F> combo(d, d);
    combo.setConstant(F(0));
    for (const auto& g : gens) combo += F(static_cast<int>(1 + rng.below(97))) * g;
    DenseMatrix<F> first(d * d, d * d);
    first.setConstant(F(0));
    for (Eigen::Index u = 0; u < d; ++u)
      for (Eigen::Index v = 0; v < d; ++v) {
        Eigen::Index row = u * d + v;
        for (Eigen::Index a = 0; a < d; ++a) {
          first(row, u * d + a) += combo(a, v);
          first(row, a * d + v) -= combo(u, a);
        }
      }
    DenseMatrix<F> k1 = nullspace(first);
    for (Eigen::Index r = 0; r < k1.rows(); ++r)
      basis.push_back(detail::unvec<F>(k1.row(r).transpose(), d, d));

    for (const auto& g : gens) {
      if (basis.empty()) break;
      DenseMatrix<F> sys(d * d, static_cast<Eigen::Index>(basis.size()));
      for (std::size_t b = 0; b < basis.size(); ++b)
        sys.col(static_cast<Eigen::Index>(b)) = detail::vec_of<F>(basis[b] * g - g * basis[b]);
      DenseMatrix<F> combos = nullspace(sys);
      std::vector<DenseMatrix<F>> refined;
      for (Eigen::Index r = 0; r < combos.rows(); ++r) {
        DenseMatrix<F> s(d, d);
        s.setConstant(F(0));
        for (std::size_t b = 0; b < basis.size(); ++b)
          s += combos(r, static_cast<Eigen::Index>(b)) * basis[b];
        refined.push_back(std::move(s));
      }
      basis = std::move(refined);
    }
    return basis;
  }

  // ---- the regular-summand shortcut ------------------------------------------

  static bool has_regular_summand(const ModuleRep<F>& p) {
    for (const Summand& s : p.summands())
      if (j_set(Composition(s.lambda)).empty()) return true;
    return false;
  }

  // With a free summand present every element of the commutant of End(P) is
  // given by the action of an algebra element: evaluating the homs out of the
  // free block at its generator writes sigma = nu(h). The premises that make
  // the evaluation argument close up are checked here: the hom spaces out of
  // the free block have full dimension, and im(nu) lies in the commutant of a
  // sample of End basis elements.
  Eigen::Index regular_dend_dimension(const ModuleRep<F>& p, const EndStructure<F>* es) {
    std::size_t reg = 0;
    bool found = false;
    for (std::size_t i = 0; i < p.summands().size(); ++i)
      if (j_set(Composition(p.summands()[i].lambda)).empty()) {
        reg = i;
        found = true;
        break;
      }
    require(found, errc::internal, "no free summand");
    require(p.summands()[reg].dim == factorial(p.rank()), errc::internal,
            "free summand has wrong dimension");
    for (std::size_t j = 0; j < p.summands().size(); ++j) {
      auto homs = hom_block(p, reg, j);
      require(static_cast<Eigen::Index>(homs.size()) == p.summands()[j].dim, errc::internal,
              "hom space out of the free block is not full");
    }
    DenseMatrix<F> sys = detail::action_system(p);
    Eigen::Index image_dim = rank_of(sys);
    if (es) spot_check_image_commutes(p, *es);
    return image_dim;
  }

  void spot_check_image_commutes(const ModuleRep<F>& p, const EndStructure<F>& es) {
    Rng rng(0x1234);
    if (es.homs.empty()) return;
    const Eigen::Index d = p.dim();
    for (int probe = 0; probe < 3; ++probe) {
      std::size_t pick = rng.below(es.homs.size());
      DenseMatrix<F> phi = es.embedded(pick, d);
      for (int i = 1; i < p.rank(); ++i) {
        const DenseMatrix<F>& nu = p.generator_action(i);
        require(nu * phi == phi * nu, errc::internal, "im(nu) does not commute with End");
      }
    }
  }

  // ---- block-diagonal commutant for multi-summand modules ---------------------

  struct BlockDend {
    Eigen::Index total_dim = 0;
    std::vector<const std::vector<DenseMatrix<F>>*> blocks;  // per-summand commutant bases
    DenseMatrix<F> solutions;  // rows: solution coords over the concatenated bases
  };

  const std::vector<DenseMatrix<F>>& diag_commutant(const TypeKey& k, const F& q) {
    auto it = diag_commutant_.find(k);
    if (it != diag_commutant_.end()) return it->second;
    const ModuleRep<F>& m = standalone(k, q);
    CentraliserContext<F> sub;  // separate scratch caches for the standalone run
    EndStructure<F> es = sub.end_structure(m);
    std::vector<DenseMatrix<F>> gens;
    for (auto& h : es.homs) gens.push_back(h.phi);
    return diag_commutant_.emplace(k, commutant_basis(m.dim(), gens)).first->second;
  }

  // Reduced pair constraints between two summand types in the coordinates of
  // their diagonal commutant bases.
  const DenseMatrix<F>& pair_rows(const TypeKey& a, const TypeKey& b, const F& q) {
    auto key = std::make_pair(a, b);
    auto it = pair_rows_.find(key);
    if (it != pair_rows_.end()) return it->second;

    const std::vector<DenseMatrix<F>>& ca = diag_commutant(a, q);
    const std::vector<DenseMatrix<F>>& cb = diag_commutant(b, q);
    const Eigen::Index wa = static_cast<Eigen::Index>(ca.size());
    const Eigen::Index wb = static_cast<Eigen::Index>(cb.size());
    detail::IncrementalRref<F> acc(wa + wb);

    ModuleRep<F> pair_module = direct_sum<F>({{a.lambda, 1, a.is_signed},
                                              {b.lambda, 1, b.is_signed}},
                                             q);
    EndStructure<F> es = end_structure(pair_module);
    for (const auto& h : es.homs) {
      if (h.from == h.to) continue;  // diagonal constraints already in C_a, C_b
      const auto& src = (h.from == 0) ? ca : cb;
      const auto& dst = (h.to == 0) ? ca : cb;
      const Eigen::Index src_at = (h.from == 0) ? 0 : wa;
      const Eigen::Index dst_at = (h.to == 0) ? 0 : wa;
      // sigma_to * phi - phi * sigma_from = 0, coefficients per basis element
      std::vector<DenseMatrix<F>> cols;
      cols.reserve(static_cast<std::size_t>(wa + wb));
      DenseMatrix<F> coeff(h.phi.rows() * h.phi.cols(), wa + wb);
      coeff.setConstant(F(0));
      for (std::size_t k = 0; k < src.size(); ++k)
        coeff.col(src_at + static_cast<Eigen::Index>(k)) = detail::vec_of<F>(
            DenseMatrix<F>(-(h.phi * src[k])));
      for (std::size_t k = 0; k < dst.size(); ++k)
        coeff.col(dst_at + static_cast<Eigen::Index>(k)) = detail::vec_of<F>(
            DenseMatrix<F>(dst[k] * h.phi));
      for (Eigen::Index r = 0; r < coeff.rows(); ++r) acc.add_row(coeff.row(r).transpose());
    }
    return pair_rows_.emplace(key, acc.basis()).first->second;
  }

  BlockDend block_dend(const ModuleRep<F>& p) {
    const auto& summands = p.summands();
    require(summands.size() >= 2, errc::internal, "block path needs a direct sum");
    BlockDend out;
    std::vector<Eigen::Index> offsets;  // coordinate offsets per summand
    Eigen::Index width = 0;
    for (const Summand& s : summands) {
      const auto& c = diag_commutant(key_of(s), p.q());
      offsets.push_back(width);
      width += static_cast<Eigen::Index>(c.size());
      out.blocks.push_back(&c);
    }
    std::vector<DenseVector<F>> all_rows;
    for (std::size_t i = 0; i < summands.size(); ++i)
      for (std::size_t j = i + 1; j < summands.size(); ++j) {
        const DenseMatrix<F>& rows = pair_rows(key_of(summands[i]), key_of(summands[j]), p.q());
        for (Eigen::Index r = 0; r < rows.rows(); ++r) {
          DenseVector<F> full(width);
          full.setConstant(F(0));
          Eigen::Index wi = static_cast<Eigen::Index>(out.blocks[i]->size());
          Eigen::Index wj = static_cast<Eigen::Index>(out.blocks[j]->size());
          full.segment(offsets[i], wi) = rows.row(r).segment(0, wi).transpose();
          full.segment(offsets[j], wj) = rows.row(r).segment(wi, wj).transpose();
          all_rows.push_back(std::move(full));
        }
      }
    DenseMatrix<F> sys(static_cast<Eigen::Index>(all_rows.size()), width);
    for (std::size_t r = 0; r < all_rows.size(); ++r)
      sys.row(static_cast<Eigen::Index>(r)) = all_rows[r].transpose();
    out.solutions = nullspace(sys);
    out.total_dim = out.solutions.rows();
    return out;
  }

  // ---- misc -------------------------------------------------------------------

  std::string describe(const ModuleRep<F>& p) {
    if (p.summands().empty()) return "module of dimension " + std::to_string(p.dim());
    std::string s;
    for (const Summand& sm : p.summands()) {
      if (!s.empty()) s += " + ";
      s += (sm.is_signed ? "Ms" : "M") + to_string(sm.lambda);
    }
    return s;
  }

  // Two-sided ideal sanity: a handful of products of annihilator elements with
  // basis elements stay inside the annihilator.
  void ideal_sanity(const ModuleRep<F>& p, const Subspace<F>& ann) {
    if (ann.dim() == 0) return;
    Rng rng(0x9d5);
    std::vector<Perm> perms = all_perms(p.rank());
    for (int probe = 0; probe < 5; ++probe) {
      Eigen::Index row = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(ann.dim())));
      HeckeElement<F> h =
          HeckeElement<F>::from_vector(p.rank(), p.q(), ann.basis().row(row).transpose());
      const Perm& w = perms[rng.below(perms.size())];
      HeckeElement<F> tw = HeckeElement<F>::basis(p.rank(), p.q(), w);
      require(ann.contains((h * tw).to_vector()), errc::internal,
              "annihilator not closed under right multiplication");
      require(ann.contains((tw * h).to_vector()), errc::internal,
              "annihilator not closed under left multiplication");
    }
  }

  std::map<TypeKey, ModuleRep<F>> standalone_;
  std::map<TypeKey, std::vector<DenseMatrix<F>>> diag_commutant_;
  std::map<std::pair<TypeKey, TypeKey>, DenseMatrix<F>> pair_rows_;
};

// ---- one-shot wrappers ------------------------------------------------------

template <class F>
Subspace<F> annihilator(const ModuleRep<F>& p) {
  CentraliserContext<F> ctx;
  return ctx.annihilator(p);
}

template <class F>
Subspace<F> end_algebra(const ModuleRep<F>& p) {
  CentraliserContext<F> ctx;
  return ctx.end_algebra(p);
}

template <class F>
Subspace<F> double_end(const ModuleRep<F>& p, const Subspace<F>& end_basis) {
  CentraliserContext<F> ctx;
  return ctx.double_end(p, end_basis);
}

template <class F>
CentraliserReport dc_check(const ModuleRep<F>& p) {
  CentraliserContext<F> ctx;
  return ctx.dc_check(p);
}

inline IntegralAnnihilator integral_annihilator_lattice(const ModuleRep<Rational>& p) {
  return CentraliserContext<Rational>::integral_annihilator_lattice(p);
}

}  // namespace heckelab
