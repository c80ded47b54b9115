#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqk {

/// A well-formed request that has no answer: bad block sizes, malformed
/// irreps, exhausted budgets, shape mismatches.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Surface-syntax failure with the byte offset where parsing stopped.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset,
              std::vector<std::string> expected = {});

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
  [[nodiscard]] const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace fqk
