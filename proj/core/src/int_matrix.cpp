#include "fqk/int_matrix.hpp"

#include <algorithm>

#include "fqk/error.hpp"

namespace fqk {

Basis::Basis(std::vector<std::string> labels)
    : size_(labels.size()),
      stored_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {}

Basis::Basis(std::size_t size, std::function<std::string(std::size_t)> namer)
    : size_(size), namer_(std::move(namer)) {}

Basis Basis::indexed(std::size_t size) {
  return Basis(size, [](std::size_t i) { return std::to_string(i); });
}

std::string Basis::label(std::size_t i) const {
  if (i >= size_) throw DomainError("basis index out of range");
  if (stored_) return (*stored_)[i];
  if (namer_) return namer_(i);
  return std::to_string(i);
}

std::vector<std::string> Basis::labels() const {
  if (stored_) return *stored_;
  std::vector<std::string> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(label(i));
  return out;
}

namespace {

void check_index_width(std::size_t n) {
  if (n > 0xffffffffULL) throw DomainError("matrix dimension exceeds 2^32");
}

}  // namespace

IntMatrix::Builder::Builder(Basis rows, Basis cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  check_index_width(rows_.size());
}

void IntMatrix::Builder::add(std::size_t row, Integer value) {
  if (row >= rows_.size()) throw DomainError("matrix row out of range");
  if (value.is_zero()) return;
  pending_.emplace_back(static_cast<std::uint32_t>(row), std::move(value));
}

void IntMatrix::Builder::finish_column() {
  if (col_ptr_.size() > cols_.size()) {
    throw DomainError("more columns than the column basis holds");
  }
  std::sort(pending_.begin(), pending_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < pending_.size();) {
    Integer sum = std::move(pending_[i].second);
    std::size_t j = i + 1;
    for (; j < pending_.size() && pending_[j].first == pending_[i].first; ++j) {
      sum += pending_[j].second;
    }
    if (!sum.is_zero()) {
      row_idx_.push_back(pending_[i].first);
      values_.push_back(std::move(sum));
    }
    i = j;
  }
  pending_.clear();
  col_ptr_.push_back(values_.size());
}

IntMatrix IntMatrix::Builder::build() && {
  if (!pending_.empty()) finish_column();
  while (col_ptr_.size() <= cols_.size()) col_ptr_.push_back(values_.size());
  IntMatrix m;
  m.rows_ = std::move(rows_);
  m.cols_ = std::move(cols_);
  m.col_ptr_ = std::move(col_ptr_);
  m.row_idx_ = std::move(row_idx_);
  m.values_ = std::move(values_);
  return m;
}

IntMatrix::IntMatrix(Basis rows, Basis cols)
    : rows_(std::move(rows)), cols_(std::move(cols)),
      col_ptr_(cols_.size() + 1, 0) {}

IntMatrix IntMatrix::from_triplets(Basis rows, Basis cols,
                                   std::vector<Triplet> entries) {
  const std::size_t ncols = cols.size();
  for (const auto& t : entries) {
    if (t.col >= ncols) throw DomainError("matrix column out of range");
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Triplet& a, const Triplet& b) { return a.col < b.col; });
  Builder b(std::move(rows), std::move(cols));
  std::size_t k = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    for (; k < entries.size() && entries[k].col == c; ++k) {
      b.add(entries[k].row, std::move(entries[k].value));
    }
    b.finish_column();
  }
  return std::move(b).build();
}

IntMatrix IntMatrix::from_dense(const DenseMatrix& a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  return from_dense(a, Basis::indexed(m), Basis::indexed(n));
}

IntMatrix IntMatrix::from_dense(const DenseMatrix& a, Basis rows, Basis cols) {
  const std::size_t m = rows.size();
  const std::size_t n = cols.size();
  if (a.size() != m) throw DomainError("dense matrix has the wrong row count");
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("dense matrix rows differ in length");
  }
  Builder b(std::move(rows), std::move(cols));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) b.add(i, a[i][j]);
    b.finish_column();
  }
  return std::move(b).build();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  Builder b(Basis::indexed(n), Basis::indexed(n));
  for (std::size_t j = 0; j < n; ++j) {
    b.add(j, 1);
    b.finish_column();
  }
  return std::move(b).build();
}

Integer IntMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols()) throw DomainError("matrix index out of range");
  const auto first = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[col]);
  const auto last = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_ptr_[col + 1]);
  const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(row));
  if (it == last || *it != row) return 0;
  return values_[static_cast<std::size_t>(it - row_idx_.begin())];
}

std::vector<IntMatrix::Triplet> IntMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k) {
      out.push_back({row_idx_[k], c, values_[k]});
    }
  }
  return out;
}

DenseMatrix IntMatrix::to_dense() const {
  DenseMatrix d(rows(), std::vector<Integer>(cols()));
  for (std::size_t c = 0; c < cols(); ++c) {
    for (std::size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k) {
      d[row_idx_[k]][c] = values_[k];
    }
  }
  return d;
}

IntMatrix IntMatrix::transpose() const {
  std::vector<Triplet> t = triplets();
  for (auto& e : t) std::swap(e.row, e.col);
  return from_triplets(cols_, rows_, std::move(t));
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         a.col_ptr_ == b.col_ptr_ && a.row_idx_ == b.row_idx_ &&
         a.values_ == b.values_;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in product");
  IntMatrix::Builder out(a.row_basis(), b.col_basis());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t k = b.col_begin(c); k < b.col_end(c); ++k) {
      const std::size_t mid = b.entry_row(k);
      for (std::size_t q = a.col_begin(mid); q < a.col_end(mid); ++q) {
        out.add(a.entry_row(q), a.entry_value(q) * b.entry_value(k));
      }
    }
    out.finish_column();
  }
  return std::move(out).build();
}

std::string render_combination(const SparseVector& v, const Basis& basis) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : v) {
    const bool negative = c.sign() < 0;
    const Integer mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!(mag == Integer(1))) out += mag.to_string() + "*";
    out += basis.label(i);
    first = false;
  }
  return out;
}

}  // namespace fqk
