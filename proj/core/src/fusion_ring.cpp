#include "fqk/fusion_ring.hpp"

#include <algorithm>
#include <sstream>

#include "fqk/error.hpp"

namespace fqk {

struct FusionRing::Impl {
  std::vector<Block> blocks;
  std::string name;
};

namespace {

constexpr std::uint32_t kAmbientFO = 0;
constexpr std::uint32_t kAmbientZ = 1;

void flatten(const RingSpec& spec, std::vector<RingSpec>& out) {
  if (spec.kind == RingSpec::Kind::Product) {
    for (const auto& f : spec.factors) flatten(f, out);
  } else {
    out.push_back(spec);
  }
}

std::string block_name(const Block& b) {
  switch (b.kind) {
    case BlockKind::FO: return "FO(" + std::to_string(b.size) + ")";
    case BlockKind::FU: return "FU(" + std::to_string(b.size) + ")";
    case BlockKind::Z: return "Z";
  }
  return "?";
}

[[noreturn]] void malformed(const std::string& why) {
  throw DomainError("malformed irrep: " + why);
}

Irrep drop_last(const Irrep& r) {
  return Irrep(std::vector<Letter>(r.letters.begin(), r.letters.end() - 1));
}

Irrep drop_first(const Irrep& r) {
  return Irrep(std::vector<Letter>(r.letters.begin() + 1, r.letters.end()));
}

}  // namespace

FusionRing FusionRing::make(const RingSpec& spec) {
  std::vector<RingSpec> flat;
  flatten(spec, flat);
  if (flat.empty()) throw DomainError("empty free product");
  auto impl = std::make_shared<Impl>();
  for (const auto& f : flat) {
    Block b;
    switch (f.kind) {
      case RingSpec::Kind::FO:
        b.kind = BlockKind::FO;
        break;
      case RingSpec::Kind::FU:
        b.kind = BlockKind::FU;
        break;
      case RingSpec::Kind::Z:
        b.kind = BlockKind::Z;
        break;
      case RingSpec::Kind::Product:
        break;  // unreachable after flatten
    }
    b.size = f.size;
    if (b.kind != BlockKind::Z && b.size < 2) {
      throw DomainError("unsupported block size: " + block_name(b));
    }
    if (b.kind == BlockKind::FU) {
      b.ambient = std::make_shared<const FusionRing>(
          make(RingSpec::product({RingSpec::fo(b.size), RingSpec::z()})));
    }
    if (!impl->name.empty()) impl->name += "*";
    impl->name += block_name(b);
    impl->blocks.push_back(std::move(b));
  }
  return FusionRing(std::move(impl));
}

std::size_t FusionRing::factor_count() const noexcept {
  return impl_->blocks.size();
}

const Block& FusionRing::block(std::size_t factor) const {
  if (factor >= impl_->blocks.size()) {
    throw DomainError("factor index " + std::to_string(factor) +
                      " out of range for " + impl_->name);
  }
  return impl_->blocks[factor];
}

std::span<const Block> FusionRing::blocks() const noexcept {
  return impl_->blocks;
}

const std::string& FusionRing::name() const noexcept { return impl_->name; }

RingSpec FusionRing::spec() const {
  std::vector<RingSpec> fs;
  for (const auto& b : impl_->blocks) {
    switch (b.kind) {
      case BlockKind::FO: fs.push_back(RingSpec::fo(b.size)); break;
      case BlockKind::FU: fs.push_back(RingSpec::fu(b.size)); break;
      case BlockKind::Z: fs.push_back(RingSpec::z()); break;
    }
  }
  if (fs.size() == 1) return fs.front();
  return RingSpec::product(std::move(fs));
}

FusionRing free_product(const FusionRing& a, const FusionRing& b) {
  return FusionRing::make(RingSpec::product({a.spec(), b.spec()}));
}

void FusionRing::validate(const Letter& l) const {
  if (l.factor >= impl_->blocks.size()) {
    malformed("letter factor " + std::to_string(l.factor) + " not in " +
              impl_->name);
  }
  const Block& b = impl_->blocks[l.factor];
  switch (b.kind) {
    case BlockKind::FO:
      if (l.word || l.index < 1) malformed("FO letters need an index >= 1");
      return;
    case BlockKind::Z:
      if (l.word || l.index == 0) malformed("Z letters need exponent != 0");
      return;
    case BlockKind::FU:
      if (!l.word || l.word->is_trivial()) {
        malformed("FU letters need a nontrivial ambient word");
      }
      b.ambient->validate(*l.word);
      if (!is_in_W(*l.word)) malformed("FU label is not a W-word");
      if (l.index != w_degree(*l.word)) malformed("FU letter degree mismatch");
      return;
  }
}

void FusionRing::validate(const Irrep& r) const {
  for (std::size_t i = 0; i < r.letters.size(); ++i) {
    validate(r.letters[i]);
    if (i > 0 && r.letters[i].factor == r.letters[i - 1].factor) {
      malformed("adjacent letters share a factor");
    }
  }
}

Letter FusionRing::conj(const Letter& l) const {
  const Block& b = block(l.factor);
  switch (b.kind) {
    case BlockKind::FO: return l;
    case BlockKind::Z: return Letter{l.factor, -l.index, nullptr};
    case BlockKind::FU:
      return Letter{l.factor, l.index,
                    std::make_shared<const Irrep>(b.ambient->conj(*l.word))};
  }
  return l;
}

Irrep FusionRing::conj(const Irrep& r) const {
  validate(r);
  Irrep out;
  out.letters.reserve(r.letters.size());
  for (auto it = r.letters.rbegin(); it != r.letters.rend(); ++it) {
    out.letters.push_back(conj(*it));
  }
  return out;
}

Integer fo_dimension(int n, std::int64_t k) {
  Integer prev = 1;
  Integer cur = n;
  if (k == 0) return prev;
  for (std::int64_t i = 1; i < k; ++i) {
    Integer next = cur * Integer(n) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer FusionRing::dim(const Letter& l) const {
  const Block& b = block(l.factor);
  switch (b.kind) {
    case BlockKind::FO: return fo_dimension(b.size, l.index);
    case BlockKind::Z: return 1;
    case BlockKind::FU: return b.ambient->dim(*l.word);
  }
  return 1;
}

Integer FusionRing::dim(const Irrep& r) const {
  validate(r);
  Integer d = 1;
  for (const auto& l : r.letters) d *= dim(l);
  return d;
}

std::vector<BlockTerm> FusionRing::fuse_letters(const Letter& a,
                                                const Letter& b) const {
  if (a.factor != b.factor) {
    throw DomainError("fuse_letters: letters from different factors");
  }
  const Block& blk = block(a.factor);
  std::vector<BlockTerm> out;
  switch (blk.kind) {
    case BlockKind::FO: {
      const std::int64_t lo = a.index > b.index ? a.index - b.index
                                                : b.index - a.index;
      for (std::int64_t j = lo; j <= a.index + b.index; j += 2) {
        if (j == 0) {
          out.push_back({std::nullopt, 1});
        } else {
          out.push_back({make_letter(a.factor, j), 1});
        }
      }
      break;
    }
    case BlockKind::Z: {
      const std::int64_t e = a.index + b.index;
      if (e == 0) {
        out.push_back({std::nullopt, 1});
      } else {
        out.push_back({make_letter(a.factor, e), 1});
      }
      break;
    }
    case BlockKind::FU: {
      FormalSum ambient = blk.ambient->fuse(*a.word, *b.word);
      for (const auto& [t, c] : ambient) {
        if (t.is_trivial()) {
          out.push_back({std::nullopt, c});
        } else {
          out.push_back({Letter{a.factor, w_degree(t),
                                std::make_shared<const Irrep>(t)},
                         c});
        }
      }
      break;
    }
  }
  return out;
}

void FusionRing::fuse_into(const Irrep& r, const Irrep& s,
                           const Integer& coefficient, FormalSum& out) const {
  if (r.is_trivial()) {
    out.add(s, coefficient);
    return;
  }
  if (s.is_trivial()) {
    out.add(r, coefficient);
    return;
  }
  const Letter& a = r.letters.back();
  const Letter& b = s.letters.front();
  if (a.factor != b.factor) {
    out.add(concat(r, s), coefficient);
    return;
  }
  const Irrep head = drop_last(r);
  const Irrep tail = drop_first(s);
  for (const auto& term : fuse_letters(a, b)) {
    const Integer c = coefficient * term.multiplicity;
    if (term.letter) {
      Irrep w;
      w.letters.reserve(head.size() + tail.size() + 1);
      w.letters = head.letters;
      w.letters.push_back(*term.letter);
      w.letters.insert(w.letters.end(), tail.letters.begin(),
                       tail.letters.end());
      out.add(w, c);
    } else {
      fuse_into(head, tail, c, out);
    }
  }
}

FormalSum FusionRing::fuse(const Irrep& r, const Irrep& s) const {
  validate(r);
  validate(s);
  FormalSum out;
  fuse_into(r, s, 1, out);
  return out;
}

FormalSum FusionRing::fuse(const FormalSum& a, const FormalSum& b) const {
  FormalSum out;
  for (const auto& [r, cr] : a) {
    validate(r);
    for (const auto& [s, cs] : b) {
      validate(s);
      fuse_into(r, s, cr * cs, out);
    }
  }
  return out;
}

std::vector<Letter> FusionRing::letters_up_to(std::size_t factor,
                                              int depth) const {
  const Block& b = block(factor);
  const auto f = static_cast<std::uint32_t>(factor);
  std::vector<Letter> out;
  switch (b.kind) {
    case BlockKind::FO:
      for (int k = 1; k <= depth; ++k) out.push_back(make_letter(f, k));
      break;
    case BlockKind::Z:
      for (int k = 1; k <= depth; ++k) {
        out.push_back(make_letter(f, -k));
        out.push_back(make_letter(f, k));
      }
      break;
    case BlockKind::FU:
      for (int d = 1; d <= depth; ++d) {
        for (auto& w : w_words_of_degree(d)) {
          out.push_back(Letter{f, d, std::make_shared<const Irrep>(
                                         std::move(w))});
        }
      }
      break;
  }
  return out;
}

std::vector<Irrep> FusionRing::irreps_up_to(int depth) const {
  std::vector<std::vector<Letter>> alphabet;
  for (std::size_t f = 0; f < factor_count(); ++f) {
    alphabet.push_back(letters_up_to(f, depth));
  }
  std::vector<Irrep> out;
  std::vector<Letter> stack;
  auto extend = [&](auto&& self, std::int64_t budget) -> void {
    out.emplace_back(stack);
    for (std::size_t f = 0; f < alphabet.size(); ++f) {
      if (!stack.empty() && stack.back().factor == f) continue;
      for (const auto& l : alphabet[f]) {
        if (l.weight() > budget) continue;
        stack.push_back(l);
        self(self, budget - l.weight());
        stack.pop_back();
      }
    }
  };
  if (depth >= 0) extend(extend, depth);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_in_W(const Irrep& word) {
  const auto& ls = word.letters;
  if (ls.empty()) return true;
  std::size_t i = 0;
  std::int64_t eps = 1;
  if (ls[0].factor == kAmbientZ) {
    if (ls[0].index != -1) return false;
    eps = -1;
    i = 1;
  }
  while (true) {
    if (i >= ls.size() || ls[i].factor != kAmbientFO) return false;
    const std::int64_t n = ls[i].index;
    ++i;
    // eps_{i+1} = -(-1)^{n_{i+1}} eps_i
    const std::int64_t next = (n % 2 == 0) ? -eps : eps;
    if (i == ls.size()) return next == -1;
    if (ls[i].factor != kAmbientZ) return false;
    const std::int64_t e = ls[i].index;
    if (i + 1 == ls.size()) return e == 1 && next == 1;
    if (e != next) return false;
    eps = next;
    ++i;
  }
}

std::int64_t w_degree(const Irrep& word) {
  std::int64_t d = 0;
  for (const auto& l : word.letters) {
    if (l.factor == kAmbientFO) d += l.index;
  }
  return d;
}

std::vector<Irrep> w_words_of_degree(std::int64_t degree) {
  std::vector<Irrep> out;
  if (degree < 1) return out;
  std::vector<std::int64_t> parts;
  auto emit = [&](std::int64_t eps0) {
    Irrep w;
    std::int64_t eps = eps0;
    if (eps0 == -1) w.letters.push_back(make_letter(kAmbientZ, -1));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) w.letters.push_back(make_letter(kAmbientZ, eps));
      w.letters.push_back(make_letter(kAmbientFO, parts[i]));
      eps = (parts[i] % 2 == 0) ? -eps : eps;
    }
    if (eps == 1) w.letters.push_back(make_letter(kAmbientZ, 1));
    out.push_back(std::move(w));
  };
  auto compose = [&](auto&& self, std::int64_t remaining) -> void {
    if (remaining == 0) {
      emit(1);
      emit(-1);
      return;
    }
    for (std::int64_t n = 1; n <= remaining; ++n) {
      parts.push_back(n);
      self(self, remaining - n);
      parts.pop_back();
    }
  };
  compose(compose, degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fqk
