#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fqk/integer.hpp"
#include "fqk/pv.hpp"

namespace fqk {

/// A word in the generator alphabet, as alphabet indices.  Empty is the unit.
using GeneratorWord = std::vector<std::uint8_t>;

/// Finitely supported integer combination; zero coefficients never stored.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Integer>;

  void add(const Key& k, const Integer& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator*=(const Integer& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }
  [[nodiscard]] Integer coefficient(const Key& k) const {
    const auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Element of TV, the free algebra on u_i, ubar_i, v_j.
using TensorElement = LinearCombination<GeneratorWord>;
/// Element of TV (x) V, keyed by (word, generator).
using TensorPair = LinearCombination<std::pair<GeneratorWord, std::uint8_t>>;

class TensorAlgebra {
 public:
  explicit TensorAlgebra(const PvSpec& spec);

  [[nodiscard]] const std::vector<Generator>& alphabet() const noexcept {
    return alphabet_;
  }
  /// Every word of degree <= d, by degree then lexicographically.
  [[nodiscard]] std::vector<GeneratorWord> words_up_to(int d) const;
  /// Throws DomainError for unknown labels.
  [[nodiscard]] std::uint8_t generator(const std::string& label) const;
  [[nodiscard]] GeneratorWord word(const std::vector<std::string>& labels) const;

  [[nodiscard]] TensorElement multiply(const TensorElement& a,
                                       const TensorElement& b) const;
  /// The augmentation sending each generator to its dimension.
  [[nodiscard]] Integer epsilon(const GeneratorWord& w) const;
  [[nodiscard]] Integer epsilon(const TensorElement& x) const;
  /// theta: u_i <-> ubar_i, v_j fixed.
  [[nodiscard]] std::uint8_t theta(std::uint8_t g) const;

  /// d(x (x) g) = x theta(g) - epsilon(g) x.
  [[nodiscard]] TensorElement d(const TensorPair& x) const;
  /// h_1(1) = 0, h_1(w g) = w (x) theta(g) + epsilon(g) h_1(w).
  [[nodiscard]] TensorPair h1(const TensorElement& x) const;
  /// h_0(n) = n times the unit word.
  [[nodiscard]] TensorElement h0(const Integer& n) const;

  [[nodiscard]] std::string render(const GeneratorWord& w) const;
  [[nodiscard]] std::string render(const TensorElement& x) const;
  [[nodiscard]] std::string render(const TensorPair& x) const;

 private:
  std::vector<Generator> alphabet_;
};

struct ResolutionVerdict {
  bool exact = true;
  int max_degree = 0;
  std::size_t words = 0;   // basis words of TV checked
  std::size_t pairs = 0;   // basis elements of TV (x) V checked
  std::size_t checks = 0;  // identities verified
  /// First failing basis element, rendered; empty when exact.
  std::string witness;
};

/// Verifies d h_1 = id - h_0 epsilon on TV, h_1 d = id and epsilon d = 0 on
/// TV (x) V, for every basis element of degree <= max_degree.
[[nodiscard]] ResolutionVerdict tv_resolution_check(const PvSpec& spec,
                                                    int max_degree);

}  // namespace fqk
