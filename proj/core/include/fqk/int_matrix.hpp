#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fqk/integer.hpp"

namespace fqk {

/// Labels for the rows or columns of a matrix.  Either stored outright or
/// produced on demand, so multi-million element bases cost nothing until a
/// label is actually printed.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<std::string> labels);
  Basis(std::size_t size, std::function<std::string(std::size_t)> namer);
  /// Labels "0", "1", ...
  static Basis indexed(std::size_t size);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] std::string label(std::size_t i) const;
  [[nodiscard]] std::vector<std::string> labels() const;

 private:
  std::size_t size_ = 0;
  std::shared_ptr<const std::vector<std::string>> stored_;
  std::function<std::string(std::size_t)> namer_;
};

using SparseVector = std::vector<std::pair<std::size_t, Integer>>;
using DenseMatrix = std::vector<std::vector<Integer>>;

/// Sparse integer matrix in compressed-column form.  Entries within a column
/// are sorted by row and never zero.
class IntMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    Integer value;
  };

  /// Appends columns left to right.  Duplicate rows inside a column are
  /// summed and cancelled entries dropped.
  class Builder {
   public:
    Builder(Basis rows, Basis cols);
    void add(std::size_t row, Integer value);
    void finish_column();
    IntMatrix build() &&;

   private:
    Basis rows_;
    Basis cols_;
    std::vector<std::pair<std::uint32_t, Integer>> pending_;
    std::vector<std::uint64_t> col_ptr_{0};
    std::vector<std::uint32_t> row_idx_;
    std::vector<Integer> values_;
  };

  IntMatrix() = default;
  /// The zero matrix.
  IntMatrix(Basis rows, Basis cols);
  static IntMatrix from_triplets(Basis rows, Basis cols,
                                 std::vector<Triplet> entries);
  static IntMatrix from_dense(const DenseMatrix& a);
  static IntMatrix from_dense(const DenseMatrix& a, Basis rows, Basis cols);
  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_.size(); }
  [[nodiscard]] const Basis& row_basis() const noexcept { return rows_; }
  [[nodiscard]] const Basis& col_basis() const noexcept { return cols_; }
  [[nodiscard]] std::size_t nnz() const noexcept { return values_.size(); }

  [[nodiscard]] Integer at(std::size_t row, std::size_t col) const;
  /// Stored (row, value) pairs of one column.
  [[nodiscard]] std::size_t col_begin(std::size_t col) const {
    return col_ptr_[col];
  }
  [[nodiscard]] std::size_t col_end(std::size_t col) const {
    return col_ptr_[col + 1];
  }
  [[nodiscard]] std::size_t entry_row(std::size_t k) const { return row_idx_[k]; }
  [[nodiscard]] const Integer& entry_value(std::size_t k) const {
    return values_[k];
  }
  [[nodiscard]] std::vector<Triplet> triplets() const;
  [[nodiscard]] DenseMatrix to_dense() const;

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] bool is_zero() const noexcept { return values_.empty(); }

  /// Entry-wise equality; labels are not compared.
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  Basis rows_;
  Basis cols_;
  std::vector<std::uint64_t> col_ptr_{0};
  std::vector<std::uint32_t> row_idx_;
  std::vector<Integer> values_;
};

/// Throws DomainError on a shape mismatch.
[[nodiscard]] IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// "2*a - b" from a sparse vector over a basis; "0" when empty.
[[nodiscard]] std::string render_combination(const SparseVector& v,
                                             const Basis& basis);

}  // namespace fqk
