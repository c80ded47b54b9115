#include "fqk/subgroups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_set>

namespace fqk {

namespace {

bool in_window(const Irrep& r, int depth) {
  if (r.length() > depth) return false;
  for (const auto& l : r.letters) {
    const std::int64_t p = l.index < 0 ? -l.index : l.index;
    if (p > depth) return false;
  }
  return true;
}

bool has_factor(const FactorSubgroup& h, std::size_t f) {
  return std::find(h.factors.begin(), h.factors.end(), f) != h.factors.end();
}

// Terms of x (x) t (left) or t (x) x (right) that stay inside the window.
// Concatenations are predicted without fusing since most of them overflow.
template <typename Sink>
void neighbours(const FusionRing& g, const Irrep& x, const Irrep& t,
                Side side, int depth, Sink&& sink) {
  const Irrep& lhs = side == Side::Left ? x : t;
  const Irrep& rhs = side == Side::Left ? t : x;
  if (!lhs.is_trivial() && !rhs.is_trivial() &&
      lhs.letters.back().factor != rhs.letters.front().factor &&
      lhs.length() + rhs.length() > depth) {
    return;
  }
  for (const auto& [s, c] : g.fuse(lhs, rhs)) {
    if (in_window(s, depth)) sink(s);
  }
}

Coset closure(const FusionRing& g, const std::vector<Irrep>& h_irreps,
              const Irrep& r, int depth, Side side,
              const ClosureBudget& budget) {
  std::set<Irrep> members{r};
  std::deque<Irrep> queue{r};
  while (!queue.empty()) {
    Irrep x = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : h_irreps) {
      neighbours(g, x, t, side, depth, [&](const Irrep& s) {
        if (members.insert(s).second) {
          if (members.size() > budget.max_nodes) {
            throw BudgetExceeded(members.size(), *members.begin(), depth);
          }
          queue.push_back(s);
        }
      });
    }
  }
  Coset c;
  c.side = side;
  c.representative = *members.begin();
  c.depth_certificate = depth;
  c.members.assign(members.begin(), members.end());
  return c;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::size_t explored, Irrep best, int depth)
    : DomainError("coset closure budget exceeded after " +
                  std::to_string(explored) + " nodes at depth " +
                  std::to_string(depth)),
      explored_(explored),
      best_(std::move(best)),
      depth_(depth) {}

ClosureBudget ClosureBudget::from_environment() {
  ClosureBudget b;
  if (const char* env = std::getenv("FQK_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_nodes = v;
  }
  return b;
}

SubgroupSpec parse_subgroup(std::string_view token, const FusionRing& g) {
  const std::string supported =
      "supported subgroups: factor:<i>, fu-in-foz, fo-even";
  if (token == "fu-in-foz") {
    SubgroupSpec h = FUInFOZ{g.block(0).size};
    check_subgroup(g, h);
    return h;
  }
  if (token == "fo-even") {
    SubgroupSpec h = FOEven{};
    check_subgroup(g, h);
    return h;
  }
  constexpr std::string_view prefix = "factor:";
  if (token.substr(0, prefix.size()) == prefix) {
    std::string_view digits = token.substr(prefix.size());
    std::size_t value = 0;
    bool ok = !digits.empty();
    for (char ch : digits) {
      if (ch < '0' || ch > '9') ok = false;
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value > 1'000'000) ok = false;
    }
    if (ok) {
      SubgroupSpec h = FactorSubgroup{{value}};
      check_subgroup(g, h);
      return h;
    }
  }
  throw SyntaxError("unknown subgroup '" + std::string(token) + "'; " +
                        supported,
                    0, {"factor:<i>", "fu-in-foz", "fo-even"});
}

void check_subgroup(const FusionRing& g, const SubgroupSpec& h) {
  if (const auto* f = std::get_if<FactorSubgroup>(&h)) {
    if (f->factors.empty()) throw DomainError("empty factor subgroup");
    for (std::size_t i : f->factors) {
      if (i >= g.factor_count()) {
        throw DomainError("factor " + std::to_string(i) + " not in " +
                          g.name());
      }
    }
  } else if (const auto* fu = std::get_if<FUInFOZ>(&h)) {
    const bool shape = g.factor_count() == 2 &&
                       g.block(0).kind == BlockKind::FO &&
                       g.block(1).kind == BlockKind::Z &&
                       g.block(0).size == fu->m;
    if (!shape) {
      throw DomainError("fu-in-foz needs G = FO(" + std::to_string(fu->m) +
                        ")*Z, got " + g.name());
    }
  } else {
    if (g.factor_count() != 1 || g.block(0).kind != BlockKind::FO) {
      throw DomainError("fo-even needs G = FO(n), got " + g.name());
    }
  }
}

bool contains(const FusionRing& g, const SubgroupSpec& h, const Irrep& r) {
  if (const auto* f = std::get_if<FactorSubgroup>(&h)) {
    return std::all_of(r.letters.begin(), r.letters.end(),
                       [&](const Letter& l) { return has_factor(*f, l.factor); });
  }
  if (std::holds_alternative<FUInFOZ>(h)) return is_in_W(r);
  (void)g;
  return r.is_trivial() || (r.size() == 1 && r.letters[0].index % 2 == 0);
}

std::vector<Irrep> subgroup_irreps(const FusionRing& g, const SubgroupSpec& h,
                                   int depth) {
  check_subgroup(g, h);
  std::vector<Irrep> out;
  for (auto& r : g.irreps_up_to(depth)) {
    if (contains(g, h, r)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Irrep> subgroup_generators(const FusionRing& g,
                                       const SubgroupSpec& h, int depth) {
  check_subgroup(g, h);
  std::vector<Irrep> out;
  if (const auto* f = std::get_if<FactorSubgroup>(&h)) {
    for (std::size_t i : f->factors) {
      for (auto& l : g.letters_up_to(i, depth)) out.push_back(Irrep({std::move(l)}));
    }
    std::sort(out.begin(), out.end());
  } else if (const auto* fu = std::get_if<FUInFOZ>(&h)) {
    for (auto which : {FUGenerator::U, FUGenerator::UBar}) {
      Irrep x = embed_fu_generator(which, fu->m);
      if (in_window(x, depth)) out.push_back(std::move(x));
    }
  } else if (depth >= 2) {
    out.push_back(Irrep({make_letter(0, 2)}));
  }
  return out;
}

Coset coset_of(const FusionRing& g, const SubgroupSpec& h, const Irrep& r,
               int depth, Side side, ClosureBudget budget) {
  g.validate(r);
  if (!in_window(r, depth)) {
    throw DomainError("irrep outside the depth-" + std::to_string(depth) +
                      " window");
  }
  return closure(g, subgroup_irreps(g, h, depth), r, depth, side, budget);
}

std::vector<Coset> cosets_up_to(const FusionRing& g, const SubgroupSpec& h,
                                int depth, Side side, ClosureBudget budget) {
  const auto h_irreps = subgroup_irreps(g, h, depth);
  std::unordered_set<Irrep, IrrepHash> assigned;
  std::vector<Coset> out;
  for (const auto& r : g.irreps_up_to(depth)) {
    if (assigned.contains(r)) continue;
    Coset c = closure(g, h_irreps, r, depth, side, budget);
    for (const auto& m : c.members) assigned.insert(m);
    out.push_back(std::move(c));
  }
  return out;
}

DivisibilityVerdict is_divisible(const FusionRing& g, const SubgroupSpec& h,
                                 int depth, ClosureBudget budget) {
  if (depth < 1) throw DomainError("divisibility needs depth >= 1");
  const auto h_irreps = subgroup_irreps(g, h, depth);
  // Cosets of the depth window are closed one level further out: the least
  // member of a class can carry a letter parameter one above the window
  // (z^k u_1 lies in the class of z^(k+1)).
  // Closing under generators of H gives the same relation as closing under
  // all of Irr(H), at a fraction of the fusions.
  const int explore = depth + 1;
  const auto h_explore = subgroup_generators(g, h, explore);
  DivisibilityVerdict verdict;
  verdict.depth = depth;
  std::unordered_set<Irrep, IrrepHash> assigned;
  for (const auto& r : g.irreps_up_to(depth)) {
    if (assigned.contains(r)) continue;
    Coset coset = closure(g, h_explore, r, explore, Side::Left, budget);
    for (const auto& m : coset.members) assigned.insert(m);
    std::optional<Irrep> found;
    for (const auto& m : coset.members) {
      const bool ok = std::all_of(
          h_irreps.begin(), h_irreps.end(),
          [&](const Irrep& s) { return g.fuse(m, s).is_irreducible(); });
      if (ok) {
        found = m;
        break;
      }
    }
    if (!found) {
      verdict.divisible = false;
      verdict.representatives.clear();
      verdict.counterexample = std::move(coset);
      return verdict;
    }
    verdict.representatives.emplace_back(std::move(coset), std::move(*found));
  }
  verdict.divisible = true;
  return verdict;
}

Irrep strip_suffix(const Irrep& r, const FactorSubgroup& h) {
  Irrep out = r;
  while (!out.letters.empty() && has_factor(h, out.letters.back().factor)) {
    out.letters.pop_back();
  }
  return out;
}

Irrep embed_fu_generator(FUGenerator which, int m) {
  if (m < 2) throw DomainError("unsupported block size: FU(" +
                               std::to_string(m) + ")");
  if (which == FUGenerator::U) {
    return Irrep({make_letter(0, 1), make_letter(1, 1)});
  }
  return Irrep({make_letter(1, -1), make_letter(0, 1)});
}

std::vector<Irrep> generate_fu_irreps(int m, int depth) {
  const FusionRing g =
      FusionRing::make(RingSpec::product({RingSpec::fo(m), RingSpec::z()}));
  const Irrep gens[] = {embed_fu_generator(FUGenerator::U, m),
                        embed_fu_generator(FUGenerator::UBar, m)};
  // Closing inside the letter-count window misses words whose only
  // predecessors have one letter more.  The degree filtration has no such
  // gap (every word of degree n is the top term of a degree n - 1 word times
  // a generator), so close up to the largest degree the window can hold.
  const std::int64_t fo_letters = (std::max(depth, 0) + 1) / 2;
  const std::int64_t max_degree = fo_letters * depth;
  std::set<Irrep> seen;
  std::deque<Irrep> queue;
  for (const auto& x : gens) {
    if (max_degree >= 1 && seen.insert(x).second) queue.push_back(x);
  }
  while (!queue.empty()) {
    Irrep x = std::move(queue.front());
    queue.pop_front();
    for (const auto& t : gens) {
      for (Side side : {Side::Left, Side::Right}) {
        const FormalSum p = side == Side::Left ? g.fuse(x, t) : g.fuse(t, x);
        for (const auto& [s, c] : p) {
          if (w_degree(s) <= max_degree && seen.insert(s).second) {
            queue.push_back(s);
          }
        }
      }
    }
  }
  std::vector<Irrep> out;
  if (depth >= 0) out.emplace_back();
  for (const auto& x : seen) {
    if (!x.is_trivial() && in_window(x, depth)) out.push_back(x);
  }
  return out;
}

}  // namespace fqk
