#include "heckelab/combin/tableau.hpp"

#include <algorithm>
#include <map>

namespace heckelab {

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  require(static_cast<int>(rows_.size()) == shape_.rows(), errc::shape_mismatch,
          "row count does not match shape");
  std::vector<bool> seen(static_cast<std::size_t>(shape_.degree()) + 1, false);
  for (int r = 0; r < shape_.rows(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    require(static_cast<int>(row.size()) == shape_.part(r), errc::shape_mismatch,
            "row length does not match shape");
    for (std::size_t c = 0; c < row.size(); ++c) {
      int x = row[c];
      require(x >= 1 && x <= shape_.degree() && !seen[static_cast<std::size_t>(x)],
              errc::shape_mismatch, "entries must be 1..n each once");
      seen[static_cast<std::size_t>(x)] = true;
      if (c > 0)
        require(row[c - 1] < x, errc::shape_mismatch, "rows must increase");
      if (r > 0)
        require(rows_[static_cast<std::size_t>(r - 1)][c] < x, errc::shape_mismatch,
                "columns must increase");
    }
  }
}

StandardTableau StandardTableau::transpose() const {
  Partition tsh = shape_.transpose();
  std::vector<std::vector<int>> trows(static_cast<std::size_t>(tsh.rows()));
  for (int r = 0; r < tsh.rows(); ++r)
    trows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(tsh.part(r)));
  for (int r = 0; r < shape_.rows(); ++r)
    for (int c = 0; c < shape_.part(r); ++c)
      trows[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = entry(r, c);
  return StandardTableau(tsh, std::move(trows));
}

Partition StandardTableau::restriction_shape(int m) const {
  std::vector<int> parts;
  for (int r = 0; r < shape_.rows(); ++r) {
    int cnt = 0;
    for (int c = 0; c < shape_.part(r); ++c)
      if (entry(r, c) <= m) ++cnt;
    if (cnt > 0) parts.push_back(cnt);
  }
  return Partition(std::move(parts));
}

std::string to_string(const StandardTableau& t) {
  std::string s;
  for (const auto& row : t.rows()) {
    s += "[";
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) s += ",";
      s += std::to_string(row[c]);
    }
    s += "]";
  }
  return s;
}

StandardTableau superstandard_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int part : lambda.parts()) {
    std::vector<int> row;
    for (int c = 0; c < part; ++c) row.push_back(next++);
    rows.push_back(std::move(row));
  }
  return StandardTableau(lambda, std::move(rows));
}

namespace {
void fill_tableaux(const Partition& lambda, std::vector<int>& filled, int value,
                   std::vector<std::vector<int>>& grid, std::vector<StandardTableau>& out) {
  if (value > lambda.degree()) {
    out.emplace_back(lambda, grid);
    return;
  }
  for (int r = 0; r < lambda.rows(); ++r) {
    int c = filled[static_cast<std::size_t>(r)];
    if (c >= lambda.part(r)) continue;
    if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <= c) continue;
    grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = value;
    ++filled[static_cast<std::size_t>(r)];
    fill_tableaux(lambda, filled, value + 1, grid, out);
    --filled[static_cast<std::size_t>(r)];
  }
}
}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  std::vector<StandardTableau> out;
  if (lambda.degree() == 0) return out;
  std::vector<int> filled(static_cast<std::size_t>(lambda.rows()), 0);
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.rows()));
  for (int r = 0; r < lambda.rows(); ++r)
    grid[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(lambda.part(r)));
  fill_tableaux(lambda, filled, 1, grid, out);
  require(!out.empty() && out.front() == superstandard_tableau(lambda), errc::internal,
          "first tableau is not superstandard");
  return out;
}

bool tableau_dominance_leq(const StandardTableau& s, const StandardTableau& t) {
  require(s.shape() == t.shape(), errc::shape_mismatch, "tableau dominance needs equal shapes");
  for (int m = 1; m <= s.degree(); ++m)
    if (!dominance_leq(s.restriction_shape(m), t.restriction_shape(m))) return false;
  return true;
}

Perm d_permutation(const StandardTableau& s) {
  StandardTableau t0 = superstandard_tableau(s.shape());
  std::vector<int> img(static_cast<std::size_t>(s.degree()));
  for (int r = 0; r < s.shape().rows(); ++r)
    for (int c = 0; c < s.shape().part(r); ++c)
      img[static_cast<std::size_t>(t0.entry(r, c) - 1)] = s.entry(r, c) - 1;
  return Perm(std::move(img));
}

long spec_dimension(const Partition& lambda) {
  long by_count = static_cast<long>(standard_tableaux(lambda).size());
  // hook length formula
  Partition tr = lambda.transpose();
  long num = factorial(lambda.degree());
  long den = 1;
  for (int r = 0; r < lambda.rows(); ++r)
    for (int c = 0; c < lambda.part(r); ++c)
      den *= (lambda.part(r) - c) + (tr.part(c) - r) - 1;
  require(num % den == 0 && num / den == by_count, errc::internal,
          "tableau count and hook length formula disagree for " + to_string(lambda));
  return by_count;
}

long capital_N(int n, int m) {
  require(1 <= m && m <= n, errc::range_error, "capital_N needs 1 <= m <= n");
  long total = 0;
  const PartitionSet all = partitions_of(n);
  for (const Partition& lam : all.members())
    if (lam.part(0) >= m) {
      long d = spec_dimension(lam);
      total += d * d;
    }
  return total;
}

}  // namespace heckelab
