#include "fqk/irrep.hpp"

#include <algorithm>

namespace fqk {

std::strong_ordering compare(const Letter& a, const Letter& b) {
  if (auto c = a.factor <=> b.factor; c != 0) return c;
  std::int64_t ma = a.index < 0 ? -a.index : a.index;
  std::int64_t mb = b.index < 0 ? -b.index : b.index;
  if (auto c = ma <=> mb; c != 0) return c;
  if (auto c = a.index <=> b.index; c != 0) return c;
  if (a.word == b.word) return std::strong_ordering::equal;
  if (!a.word) return std::strong_ordering::less;
  if (!b.word) return std::strong_ordering::greater;
  return compare(*a.word, *b.word);
}

std::int64_t Irrep::length() const noexcept {
  std::int64_t n = 0;
  for (const auto& l : letters) n += l.weight();
  return n;
}

std::strong_ordering compare(const Irrep& a, const Irrep& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  const std::size_t n = std::min(a.letters.size(), b.letters.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(a.letters[i], b.letters[i]); c != 0) return c;
  }
  return a.letters.size() <=> b.letters.size();
}

std::size_t IrrepHash::operator()(const Irrep& r) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& l : r.letters) {
    std::size_t x = std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(l.factor) << 48) ^
        static_cast<std::uint64_t>(l.index));
    if (l.word) x ^= (*this)(*l.word) * 31;
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Letter make_letter(std::uint32_t factor, std::int64_t index) {
  return Letter{factor, index, nullptr};
}

Irrep concat(const Irrep& a, const Irrep& b) {
  Irrep out;
  out.letters.reserve(a.letters.size() + b.letters.size());
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

FormalSum::FormalSum(const Irrep& r, Integer coefficient) {
  add(r, coefficient);
}

void FormalSum::add(const Irrep& r, const Integer& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(r, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Integer FormalSum::coefficient(const Irrep& r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool FormalSum::is_irreducible() const {
  return terms_.size() == 1 && terms_.begin()->second == Integer(1);
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [r, c] : other.terms_) add(r, c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Integer& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [r, c] : terms_) c *= scalar;
  return *this;
}

}  // namespace fqk
