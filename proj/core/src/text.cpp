#include "fqk/text.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "fqk/error.hpp"

namespace fqk {

SyntaxError::SyntaxError(const std::string& message, std::size_t offset,
                         std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::string m = message + " at offset " + std::to_string(offset);
        if (!expected.empty()) {
          m += " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) m += ", ";
            m += "'" + expected[i] + "'";
          }
          m += ")";
        }
        return m;
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base)
      : text_(text), base_(base) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[nodiscard]] std::size_t offset() const { return base_ + pos_; }
  [[nodiscard]] std::size_t pos() const { return pos_; }
  [[nodiscard]] std::string_view rest() const { return text_.substr(pos_); }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token, std::vector<std::string> expected) {
    if (!consume(token)) fail("unexpected input", std::move(expected));
  }

  [[noreturn]] void fail(const std::string& what,
                         std::vector<std::string> expected) const {
    throw SyntaxError(what, offset(), std::move(expected));
  }

  std::int64_t integer(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer", {"integer"});
    }
    std::string_view num = text_.substr(start, pos_ - start);
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
      pos_ = start;
      fail("integer out of range", {"integer"});
    }
    return value;
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

const std::vector<std::string> kFactorTokens = {"FO(", "FU(", "Z"};

RingSpec parse_factor(Cursor& c) {
  c.skip_space();
  const std::size_t at = c.offset();
  RingSpec::Kind kind;
  if (c.consume("FO")) {
    kind = RingSpec::Kind::FO;
  } else if (c.consume("FU")) {
    kind = RingSpec::Kind::FU;
  } else if (c.consume("Z")) {
    return RingSpec::z();
  } else {
    c.fail("unexpected input", kFactorTokens);
  }
  c.skip_space();
  c.expect("(", {"("});
  c.skip_space();
  if (c.peek() == '(') c.fail("nested parentheses are not allowed", {"integer"});
  const std::int64_t n = c.integer(false);
  c.skip_space();
  c.expect(")", {")"});
  const char* label = kind == RingSpec::Kind::FO ? "FO(" : "FU(";
  if (n < 2) {
    throw DomainError("block size must be ≥ 2: " + std::string(label) +
                      std::to_string(n) + ") at offset " + std::to_string(at));
  }
  if (n > std::numeric_limits<int>::max()) {
    throw SyntaxError("block size out of range", at, {"integer"});
  }
  return {kind, static_cast<int>(n), {}};
}

struct WordParser {
  const FusionRing& ring;
  Cursor& c;

  Letter letter() {
    const std::size_t start = c.offset();
    std::uint32_t factor = 0;
    bool prefixed = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek())) != 0) {
      const std::int64_t f = c.integer(false);
      c.expect(":", {":"});
      if (f < 0 || static_cast<std::size_t>(f) >= ring.factor_count()) {
        throw SyntaxError("factor index " + std::to_string(f) +
                              " out of range for " + ring.name(),
                          start);
      }
      factor = static_cast<std::uint32_t>(f);
      prefixed = true;
    }
    if (!prefixed && ring.factor_count() > 1) {
      c.fail("factor prefix required in a free product", {"<factor>:"});
    }
    const Block& b = ring.block(factor);
    switch (b.kind) {
      case BlockKind::FO: {
        c.expect("u", {"u<int>"});
        const std::int64_t k = c.integer(false);
        return make_letter(factor, k);
      }
      case BlockKind::Z: {
        c.expect("z^", {"z^<int>"});
        const std::int64_t k = c.integer(true);
        return make_letter(factor, k);
      }
      case BlockKind::FU: {
        Irrep w;
        if (c.consume("[")) {
          WordParser inner{*b.ambient, c};
          w = inner.word(']');
          c.expect("]", {"]"});
        } else if (c.consume("ubar")) {
          w = ring.block(factor).ambient->conj(
              Irrep({make_letter(0, 1), make_letter(1, 1)}));
        } else if (c.consume("u")) {
          w = Irrep({make_letter(0, 1), make_letter(1, 1)});
        } else {
          c.fail("unexpected input", {"u", "ubar", "["});
        }
        if (!w.is_trivial() && !is_in_W(w)) {
          throw DomainError("normalization error: FU label at offset " +
                            std::to_string(start) + " is not a W-word");
        }
        return Letter{factor, w_degree(w),
                      w.is_trivial() ? nullptr
                                     : std::make_shared<const Irrep>(w)};
      }
    }
    c.fail("unexpected input", {});
  }

  static bool trivial(const Letter& l) {
    return l.word ? false : l.index == 0;
  }

  /// Parses up to `stop` (or end of input).
  Irrep word(char stop) {
    if (c.consume("e")) {
      if (!c.at_end() && c.peek() != stop) c.fail("unexpected input", {"end"});
      return {};
    }
    std::vector<Letter> ls;
    std::vector<std::size_t> starts;
    while (true) {
      starts.push_back(c.offset());
      const std::size_t before = c.pos();
      Letter l = letter();
      std::string text(c.rest().data() - (c.pos() - before), c.pos() - before);
      const bool is_trivial_fu = l.word == nullptr &&
                                 ring.block(l.factor).kind == BlockKind::FU;
      if (trivial(l) || is_trivial_fu) {
        if (!ls.empty() || (!c.at_end() && c.peek() == '.')) {
          throw DomainError("normalization error: trivial letter '" + text +
                            "' at offset " + std::to_string(starts.back()));
        }
        if (!c.at_end() && c.peek() != stop) {
          c.fail("unexpected input", {".", "end"});
        }
        return {};
      }
      if (!ls.empty() && ls.back().factor == l.factor) {
        throw DomainError("normalization error: adjacent letters share a "
                          "factor at letter '" + text + "' (offset " +
                          std::to_string(starts.back()) + ")");
      }
      ls.push_back(std::move(l));
      if (c.at_end() || c.peek() == stop) break;
      c.expect(".", {".", "end"});
    }
    return Irrep(std::move(ls));
  }
};

}  // namespace

RingSpec parse_spec(std::string_view text) {
  Cursor c(text, 0);
  std::vector<RingSpec> factors;
  c.skip_space();
  if (c.at_end()) c.fail("empty group spec", kFactorTokens);
  factors.push_back(parse_factor(c));
  while (true) {
    c.skip_space();
    if (c.at_end()) break;
    if (!c.consume("*")) c.fail("unexpected input", {"*", "end"});
    factors.push_back(parse_factor(c));
  }
  if (factors.size() == 1) return factors.front();
  return RingSpec::product(std::move(factors));
}

Irrep parse_word(std::string_view text, const FusionRing& ring) {
  Cursor c(text, 0);
  WordParser p{ring, c};
  Irrep r = p.word('\0');
  if (!c.at_end()) c.fail("unexpected input", {"end"});
  ring.validate(r);
  return r;
}

std::string render(const FusionRing& ring, const Letter& l) {
  std::string out;
  if (ring.factor_count() > 1) out = std::to_string(l.factor) + ":";
  switch (ring.block(l.factor).kind) {
    case BlockKind::FO: return out + "u" + std::to_string(l.index);
    case BlockKind::Z: return out + "z^" + std::to_string(l.index);
    case BlockKind::FU:
      return out + "[" + render(*ring.block(l.factor).ambient, *l.word) + "]";
  }
  return out;
}

std::string render(const FusionRing& ring, const Irrep& r) {
  if (r.is_trivial()) {
    const bool single_fo =
        ring.factor_count() == 1 && ring.block(0).kind == BlockKind::FO;
    return single_fo ? "u0" : "e";
  }
  std::string out;
  for (std::size_t i = 0; i < r.letters.size(); ++i) {
    if (i > 0) out += ".";
    out += render(ring, r.letters[i]);
  }
  return out;
}

std::string render(const FusionRing& ring, const FormalSum& s) {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [r, c] : s) {
    Integer mag = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mag != Integer(1)) out += mag.to_string() + "*";
    out += render(ring, r);
    first = false;
  }
  return out;
}

}  // namespace fqk
