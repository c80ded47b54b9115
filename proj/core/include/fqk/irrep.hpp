#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "fqk/integer.hpp"

namespace fqk {

struct Irrep;

/// One nontrivial irreducible of a building block, tagged with its factor.
///
/// `index` is the FO index k >= 1, the Z exponent k != 0, or for an FU
/// block the degree of the label (its length as a word in u, ubar).  FU
/// letters additionally carry `word`, the label as a word of the ambient
/// FO(m)*Z ring.
struct Letter {
  std::uint32_t factor = 0;
  std::int64_t index = 0;
  std::shared_ptr<const Irrep> word;

  /// Contribution to word length: 1 for FO and Z letters, the degree for FU.
  [[nodiscard]] std::int64_t weight() const noexcept {
    return word ? index : 1;
  }
};

/// Orders letters by factor, then by |index| and sign (so z^-1 < z), then by
/// the ambient word for FU labels.
[[nodiscard]] std::strong_ordering compare(const Letter& a, const Letter& b);

/// An irreducible corepresentation as a reduced alternating word.  The empty
/// word is the trivial corepresentation.
struct Irrep {
  std::vector<Letter> letters;

  Irrep() = default;
  explicit Irrep(std::vector<Letter> ls) : letters(std::move(ls)) {}

  [[nodiscard]] bool is_trivial() const noexcept { return letters.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return letters.size(); }
  /// Weighted length (see Letter::weight).
  [[nodiscard]] std::int64_t length() const noexcept;
};

/// Canonical order: length, then lexicographic on letters.
[[nodiscard]] std::strong_ordering compare(const Irrep& a, const Irrep& b);

inline bool operator==(const Letter& a, const Letter& b) {
  return compare(a, b) == std::strong_ordering::equal;
}
inline bool operator==(const Irrep& a, const Irrep& b) {
  return compare(a, b) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const Irrep& a, const Irrep& b) {
  return compare(a, b);
}
inline std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
  return compare(a, b);
}

struct IrrepHash {
  std::size_t operator()(const Irrep& r) const noexcept;
};

[[nodiscard]] Letter make_letter(std::uint32_t factor, std::int64_t index);
[[nodiscard]] Irrep concat(const Irrep& a, const Irrep& b);

/// Finitely supported Z-linear combination of irreps in canonical order.
/// Zero coefficients are never stored.
class FormalSum {
 public:
  using Terms = std::map<Irrep, Integer>;

  FormalSum() = default;
  explicit FormalSum(const Irrep& r, Integer coefficient = 1);

  void add(const Irrep& r, const Integer& coefficient);
  [[nodiscard]] Integer coefficient(const Irrep& r) const;
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] Terms::const_iterator begin() const { return terms_.begin(); }
  [[nodiscard]] Terms::const_iterator end() const { return terms_.end(); }

  /// True iff this is a single irrep with multiplicity one.
  [[nodiscard]] bool is_irreducible() const;

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator*=(const Integer& scalar);
  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

}  // namespace fqk
