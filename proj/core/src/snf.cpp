#include "fqk/snf.hpp"

#include <algorithm>
#include <queue>

#include "fqk/error.hpp"

namespace fqk {

namespace {

DenseMatrix identity_dense(std::size_t n) {
  DenseMatrix d(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

class Reducer {
 public:
  explicit Reducer(DenseMatrix a)
      : a_(std::move(a)),
        m_(a_.size()),
        n_(m_ == 0 ? 0 : a_[0].size()),
        u_(identity_dense(m_)),
        ui_(identity_dense(m_)),
        v_(identity_dense(n_)) {}

  void run() {
    const std::size_t steps = std::min(m_, n_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!bring_min_to(t)) break;
      reduce_at(t);
      if (a_[t][t].sign() < 0) negate_row(t);
      factors_.push_back(a_[t][t]);
    }
  }

  DenseMatrix a_;
  std::size_t m_;
  std::size_t n_;
  DenseMatrix u_;
  DenseMatrix ui_;
  DenseMatrix v_;
  std::vector<Integer> factors_;

 private:
  // Moves the smallest nonzero |a_ij| with i >= t, j >= t into (t, t).
  bool bring_min_to(std::size_t t) {
    const std::size_t rows = m_;
    const std::size_t cols = n_;
    std::size_t bi = rows;
    std::size_t bj = cols;
    Integer best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a_[i][j].is_zero()) continue;
        Integer mag = abs(a_[i][j]);
        if (bi == rows || mag < best) {
          best = std::move(mag);
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (a_[i][t].is_zero()) continue;
        const Integer q = nearest_div(a_[i][t], a_[t][t]);
        if (!q.is_zero()) add_row(i, t, -q);
      }
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (a_[t][j].is_zero()) continue;
        const Integer q = nearest_div(a_[t][j], a_[t][t]);
        if (!q.is_zero()) add_col(j, t, -q);
      }
      // Remainders smaller than the pivot left in its row or column?
      std::size_t bi = 0;
      std::size_t bj = 0;
      Integer best;
      bool found = false;
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (a_[i][t].is_zero()) continue;
        Integer mag = abs(a_[i][t]);
        if (!found || mag < best) {
          best = std::move(mag);
          bi = i;
          bj = t;
          found = true;
        }
      }
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (a_[t][j].is_zero()) continue;
        Integer mag = abs(a_[t][j]);
        if (!found || mag < best) {
          best = std::move(mag);
          bi = t;
          bj = j;
          found = true;
        }
      }
      if (found) {
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Pivot row and column are clear; enforce divisibility.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m_ && !fixed; ++i) {
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (!divides(a_[t][t], a_[i][j])) {
            add_row(t, i, 1);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) return;
    }
  }

  // row_dst += c * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!a_[src][j].is_zero()) a_[dst][j] += c * a_[src][j];
    }
    for (std::size_t j = 0; j < m_; ++j) {
      if (!u_[src][j].is_zero()) u_[dst][j] += c * u_[src][j];
    }
    // U^-1 picks up the inverse operation on the right.
    for (std::size_t i = 0; i < m_; ++i) {
      if (!ui_[i][dst].is_zero()) ui_[i][src] -= c * ui_[i][dst];
    }
  }

  // col_dst += c * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!a_[i][src].is_zero()) a_[i][dst] += c * a_[i][src];
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (!v_[i][src].is_zero()) v_[i][dst] += c * v_[i][src];
    }
  }

  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(a_[x], a_[y]);
    std::swap(u_[x], u_[y]);
    for (std::size_t i = 0; i < m_; ++i) std::swap(ui_[i][x], ui_[i][y]);
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < m_; ++i) std::swap(a_[i][x], a_[i][y]);
    for (std::size_t i = 0; i < n_; ++i) std::swap(v_[i][x], v_[i][y]);
  }

  void negate_row(std::size_t t) {
    for (auto& x : a_[t]) x = -x;
    for (auto& x : u_[t]) x = -x;
    for (std::size_t i = 0; i < m_; ++i) ui_[i][t] = -ui_[i][t];
  }
};

SparseVector column_of(const DenseMatrix& d, std::size_t col) {
  SparseVector v;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i][col].is_zero()) v.emplace_back(i, d[i][col]);
  }
  return v;
}

KerCoker dense_ker_coker(const IntMatrix& a) {
  Reducer r(a.to_dense());
  r.run();
  const std::size_t rank = r.factors_.size();
  KerCoker out;
  out.rank = rank;
  out.kernel_rank = a.cols() - rank;
  std::vector<SparseVector> basis;
  for (std::size_t j = rank; j < a.cols(); ++j) basis.push_back(column_of(r.v_, j));
  out.kernel_basis = std::move(basis);

  AbelianGroup& g = out.cokernel;
  g.rank = a.rows() - rank;
  for (std::size_t i = rank; i < a.rows(); ++i) {
    g.generators.push_back(render_combination(column_of(r.ui_, i), a.row_basis()));
  }
  for (std::size_t i = 0; i < rank; ++i) {
    if (r.factors_[i] == Integer(1)) continue;
    g.torsion.push_back(r.factors_[i]);
    g.generators.push_back(render_combination(column_of(r.ui_, i), a.row_basis()));
  }
  return out;
}

}  // namespace

SNFResult snf(const IntMatrix& a) {
  Reducer r(a.to_dense());
  r.run();
  SNFResult out;
  out.U = IntMatrix::from_dense(r.u_, a.row_basis(), a.row_basis());
  out.D = IntMatrix::from_dense(r.a_, a.row_basis(), a.col_basis());
  out.V = IntMatrix::from_dense(r.v_, a.col_basis(), a.col_basis());
  out.U_inverse = IntMatrix::from_dense(r.ui_, a.row_basis(), a.row_basis());
  out.invariant_factors = std::move(r.factors_);
  return out;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (rank == 1) out = "Z";
  if (rank > 1) out = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.to_string();
  }
  return out;
}

KerCoker ker_coker(const IntMatrix& a, KerCokerOptions options) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m * n <= options.dense_limit) return dense_ker_coker(a);

  // Row view of the column-compressed entries.
  std::vector<std::uint64_t> row_ptr(m + 1, 0);
  for (std::size_t k = 0; k < a.nnz(); ++k) ++row_ptr[a.entry_row(k) + 1];
  for (std::size_t i = 0; i < m; ++i) row_ptr[i + 1] += row_ptr[i];
  std::vector<std::uint32_t> row_cols(a.nnz());
  std::vector<std::uint64_t> row_entry(a.nnz());
  {
    std::vector<std::uint64_t> fill(row_ptr.begin(), row_ptr.end() - 1);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = a.col_begin(c); k < a.col_end(c); ++k) {
        const std::uint64_t pos = fill[a.entry_row(k)]++;
        row_cols[pos] = static_cast<std::uint32_t>(c);
        row_entry[pos] = k;
      }
    }
  }
  std::vector<std::uint32_t> row_count(m);
  std::vector<std::uint32_t> col_count(n);
  for (std::size_t i = 0; i < m; ++i) {
    row_count[i] = static_cast<std::uint32_t>(row_ptr[i + 1] - row_ptr[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    col_count[c] = static_cast<std::uint32_t>(a.col_end(c) - a.col_begin(c));
  }
  std::vector<char> row_alive(m, 1);
  std::vector<char> col_alive(n, 1);

  // Highest row first, so the short words near the root survive longest.
  std::priority_queue<std::uint32_t> row_queue;
  std::vector<std::uint32_t> col_stack;
  for (std::size_t i = 0; i < m; ++i) {
    if (row_count[i] == 1) row_queue.push(static_cast<std::uint32_t>(i));
  }
  for (std::size_t c = n; c-- > 0;) {
    if (col_count[c] == 1) col_stack.push_back(static_cast<std::uint32_t>(c));
  }

  std::size_t rank = 0;
  while (!row_queue.empty() || !col_stack.empty()) {
    if (!row_queue.empty()) {
      const std::uint32_t i = row_queue.top();
      row_queue.pop();
      if (!row_alive[i] || row_count[i] != 1) continue;
      std::uint64_t k = 0;
      std::uint32_t j = 0;
      for (std::uint64_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p) {
        if (col_alive[row_cols[p]]) {
          j = row_cols[p];
          k = row_entry[p];
          break;
        }
      }
      if (!a.entry_value(k).is_unit()) continue;
      ++rank;
      row_alive[i] = 0;
      col_alive[j] = 0;
      for (std::size_t q = a.col_begin(j); q < a.col_end(j); ++q) {
        const std::size_t r = a.entry_row(q);
        if (!row_alive[r]) continue;
        if (--row_count[r] == 1) row_queue.push(static_cast<std::uint32_t>(r));
      }
      continue;
    }
    const std::uint32_t j = col_stack.back();
    col_stack.pop_back();
    if (!col_alive[j] || col_count[j] != 1) continue;
    std::size_t i = 0;
    std::size_t k = 0;
    for (std::size_t q = a.col_begin(j); q < a.col_end(j); ++q) {
      if (row_alive[a.entry_row(q)]) {
        i = a.entry_row(q);
        k = q;
        break;
      }
    }
    if (!a.entry_value(k).is_unit()) continue;
    ++rank;
    row_alive[i] = 0;
    col_alive[j] = 0;
    for (std::uint64_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p) {
      const std::uint32_t c = row_cols[p];
      if (!col_alive[c]) continue;
      if (--col_count[c] == 1) col_stack.push_back(c);
    }
  }

  KerCoker out;
  std::vector<std::size_t> rest_rows;
  std::vector<std::size_t> rest_cols;
  std::vector<std::string> free_gens;
  for (std::size_t i = 0; i < m; ++i) {
    if (!row_alive[i]) continue;
    if (row_count[i] == 0) {
      free_gens.push_back(a.row_basis().label(i));
    } else {
      rest_rows.push_back(i);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (!col_alive[c]) continue;
    if (col_count[c] != 0) rest_cols.push_back(c);
  }

  KerCoker residual;
  if (!rest_rows.empty()) {
    if (rest_rows.size() * rest_cols.size() > options.residual_limit) {
      throw DomainError("matrix residual after sparse reduction is too large: " +
                        std::to_string(rest_rows.size()) + "x" +
                        std::to_string(rest_cols.size()));
    }
    std::vector<std::size_t> local(m, SIZE_MAX);
    for (std::size_t i = 0; i < rest_rows.size(); ++i) local[rest_rows[i]] = i;
    std::vector<std::string> labels;
    labels.reserve(rest_rows.size());
    for (const std::size_t i : rest_rows) labels.push_back(a.row_basis().label(i));
    IntMatrix::Builder b(Basis(std::move(labels)), Basis::indexed(rest_cols.size()));
    for (const std::size_t c : rest_cols) {
      for (std::size_t q = a.col_begin(c); q < a.col_end(c); ++q) {
        const std::size_t r = a.entry_row(q);
        if (row_alive[r]) b.add(local[r], a.entry_value(q));
      }
      b.finish_column();
    }
    residual = dense_ker_coker(std::move(b).build());
  }

  out.rank = rank + residual.rank;
  out.kernel_rank = n - out.rank;
  out.cokernel.rank = free_gens.size() + residual.cokernel.rank;
  out.cokernel.torsion = residual.cokernel.torsion;
  out.cokernel.generators = std::move(free_gens);
  for (auto& g : residual.cokernel.generators) {
    out.cokernel.generators.push_back(std::move(g));
  }
  return out;
}

}  // namespace fqk
