// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero if
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fqk/fusion_ring.hpp"
#include "fqk/ktheory.hpp"
#include "fqk/pv.hpp"
#include "fqk/snf.hpp"
#include "fqk/subgroups.hpp"
#include "fqk/tensor_algebra.hpp"
#include "fqk/text.hpp"
#include "fqk/tree.hpp"
#include "oracles.hpp"

namespace {

using namespace fqk;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  Outcome() {
    detail.setf(std::ios::fixed);
    detail.precision(3);
  }
  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail << " first failure: " << why << ";";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Runs f and fails it when any single timed unit exceeds `limit` seconds.
template <class F>
double timed(Outcome& o, double limit, const std::string& what, F&& f) {
  const auto t0 = Clock::now();
  f();
  const double s = seconds_since(t0);
  if (limit > 0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    o.require(s < limit, what + " took " + buf);
  }
  return s;
}

FusionRing ring(const std::string& spec) { return FusionRing::make(parse_spec(spec)); }

PvSpec pv_spec(const std::string& text) { return PvSpec::from_ring(ring(text)); }

// 1
void pv_free_unitary(Outcome& o) {
  double worst = 0;
  for (const char* spec : {"FU(2)", "FU(3)", "FU(5)"}) {
    worst = std::max(worst, timed(o, 1.0, spec, [&] {
      const PvSpec s = pv_spec(spec);
      const KGroupReport r = pv_kgroups(s, trivial_module(s));
      o.require(r.k0.rank == 1 && r.k0.torsion.empty() &&
                    r.k0.generators == std::vector<std::string>{"1"},
                std::string(spec) + " K0 = " + r.k0.to_string());
      o.require(r.k1.rank == 2 && r.k1.torsion.empty() &&
                    r.k1.generators == std::vector<std::string>{"u", "ubar"},
                std::string(spec) + " K1 = " + r.k1.to_string());
    }));
  }
  o.detail << " K0 = Z[1], K1 = Z^2[u, ubar] for m = 2, 3, 5; slowest " << worst << "s";
}

// 2
void pv_free_products(Outcome& o) {
  std::size_t cases = 0;
  double worst = 0;
  for (const auto [k, l] : {std::pair{1, 0}, {0, 1}, {2, 1}, {1, 2}}) {
    // every assignment of sizes m_i in {2, 3} and n_j in {3, 4}
    const int blocks = k + l;
    for (int mask = 0; mask < (1 << blocks); ++mask) {
      std::string spec;
      for (int i = 0; i < blocks; ++i) {
        const bool big = (mask >> i) & 1;
        if (!spec.empty()) spec += "*";
        spec += i < k ? (big ? "FU(3)" : "FU(2)") : (big ? "FO(4)" : "FO(3)");
      }
      worst = std::max(worst, timed(o, 1.0, spec, [&] {
        const PvSpec s = pv_spec(spec);
        const KGroupReport r = pv_kgroups(s, trivial_module(s));
        o.require(r.k0.to_string() == "Z", spec + " K0 = " + r.k0.to_string());
        o.require(r.k1.rank == static_cast<std::size_t>(2 * k + l) && r.k1.torsion.empty(),
                  spec + " K1 = " + r.k1.to_string());
      }));
      ++cases;
    }
  }
  o.detail << " " << cases << " groups, K1 = Z^(2k+l); slowest " << worst << "s";
}

// 3
void tree_k_theory(Outcome& o) {
  for (const char* spec : {"FO(3)*Z", "FO(3)*FO(3)", "FU(2)*Z", "Z*Z"}) {
    for (int depth : {4, 5}) {
      const double s = timed(o, depth == 5 ? 30.0 : 0.0,
                             std::string(spec) + " depth " + std::to_string(depth), [&] {
        try {
          const KGroupReport r = k_of_tree_algebra(ring(spec), 1, depth);
          o.require(r.k0.to_string() == "Z" && r.k1.to_string() == "0" &&
                        r.stabilized_at == depth,
                    std::string(spec) + ": K0 = " + r.k0.to_string() +
                        ", K1 = " + r.k1.to_string());
        } catch (const DomainError& e) {
          o.require(false, std::string(spec) + ": " + e.what());
        }
      });
      if (depth == 5) o.detail << " " << spec << " " << s << "s;";
    }
  }
}

// 4
void divisibility(Outcome& o) {
  for (int m : {2, 3}) {
    const FusionRing g = FusionRing::make(RingSpec::product({RingSpec::fo(m), RingSpec::z()}));
    const double s = timed(o, 0, "", [&] {
      const DivisibilityVerdict v = is_divisible(g, FUInFOZ{m}, 5);
      o.require(v.divisible, g.name() + " not divisible");
      o.detail << " " << g.name() << ": " << v.representatives.size() << " cosets certified";
    });
    o.detail << " (" << s << "s);";
  }
  const FusionRing fo3 = ring("FO(3)");
  const DivisibilityVerdict v = is_divisible(fo3, FOEven{}, 4);
  const std::size_t cosets = cosets_up_to(fo3, FOEven{}, 4).size();
  o.require(!v.divisible, "FO(3) even part reported divisible");
  o.require(cosets == 2, "FO(3) even part has " + std::to_string(cosets) + " cosets");
  o.detail << " FO(3) even part: not divisible, " << cosets << " cosets";
}

// 5
bool matches_classical_tree(const BassSerreGraph& y, int depth) {
  std::map<Irrep, std::size_t> index;
  for (std::size_t e = 0; e < y.edges.size(); ++e) index[y.edges[e]] = e;
  for (int side = 0; side < 2; ++side) {
    oracle::Partition part(y.edges.size());
    for (std::size_t e = 0; e < y.edges.size(); ++e) {
      const auto w = oracle::to_free_word(y.edges[e]);
      for (int k = -depth; k <= depth; ++k) {
        if (k == 0) continue;
        const auto it = index.find(oracle::from_free_word(oracle::free_multiply(w, {{side, k}})));
        if (it != index.end()) part.join(e, it->second);
      }
    }
    // class -> vertex must be a bijection
    const auto& ends = side == 0 ? y.src : y.tgt;
    std::map<std::size_t, std::size_t> fwd, back;
    for (std::size_t e = 0; e < y.edges.size(); ++e) {
      const auto [f, fnew] = fwd.emplace(part.find(e), ends[e]);
      const auto [b, bnew] = back.emplace(ends[e], part.find(e));
      if (f->second != ends[e] || b->second != part.find(e)) return false;
    }
  }
  return true;
}

void bass_serre(Outcome& o) {
  std::size_t graphs = 0, largest = 0;
  for (const char* spec : {"FO(3)*Z", "FU(2)*Z", "Z*Z", "FO(3)*FO(4)"}) {
    for (int depth = 0; depth <= 5; ++depth) {
      const BassSerreGraph y = build_tree(ring(spec), 1, depth);
      const TreeVerdict v = verify_tree(y);
      o.require(v.kind == TreeVerdict::Kind::Tree,
                std::string(spec) + " depth " + std::to_string(depth) + ": " + to_string(v.kind));
      if (std::string(spec) == "Z*Z" && depth <= 4) {
        o.require(matches_classical_tree(y, depth),
                  "Z*Z differs from the classical tree at depth " + std::to_string(depth));
      }
      largest = std::max(largest, y.vertices.size());
      ++graphs;
    }
  }
  o.detail << " " << graphs << " graphs are trees (largest " << largest
           << " vertices); Z*Z matches the free-group coset tree to depth 4";
}

// 6
void resolution(Outcome& o) {
  std::size_t checks = 0;
  const double s = timed(o, 10.0, "resolution checks", [&] {
    for (const char* spec : {"FU(2)", "FO(3)", "FU(2)*FO(3)"}) {
      const ResolutionVerdict v = tv_resolution_check(pv_spec(spec), 5);
      o.require(v.exact, std::string(spec) + " fails at " + v.witness);
      checks += v.checks;
      o.detail << " " << spec << ": " << v.words << " words, " << v.pairs << " pairs;";
    }
  });
  o.detail << " " << checks << " identities, " << s << "s";
}

// 7
void fusion_properties(Outcome& o) {
  constexpr std::size_t kSamples = 200;
  std::size_t total = 0;
  for (const char* spec : {"FO(3)", "FO(3)*Z", "FO(3)*FO(4)", "FU(2)*Z", "FU(2)", "Z*Z"}) {
    const FusionRing g = ring(spec);
    int depth = 4;
    auto pool = g.irreps_up_to(depth);
    while (pool.size() < 20) pool = g.irreps_up_to(++depth);
    const auto a = oracle::sample(pool, kSamples, 101);
    const auto b = oracle::sample(pool, kSamples, 202);
    const auto c = oracle::sample(pool, kSamples, 303);
    const std::string name = spec;
    for (std::size_t i = 0; i < kSamples; ++i) {
      const FormalSum ab = g.fuse(a[i], b[i]);
      o.require(g.fuse(ab, FormalSum(c[i])) == g.fuse(FormalSum(a[i]), g.fuse(b[i], c[i])),
                name + " associativity");
      Integer dim = 0;
      for (const auto& [x, m] : ab) dim += m * g.dim(x);
      o.require(dim == g.dim(a[i]) * g.dim(b[i]), name + " dimension");
      FormalSum conj_ab;
      for (const auto& [x, m] : ab) conj_ab.add(g.conj(x), m);
      o.require(conj_ab == g.fuse(g.conj(b[i]), g.conj(a[i])), name + " conjugation");
      // Frobenius: e occurs in a (x) b exactly when b = conj(a), once.
      const Integer unit = ab.coefficient(Irrep());
      o.require(unit == Integer(b[i] == g.conj(a[i]) ? 1 : 0), name + " Frobenius");
      o.require(g.fuse(a[i], g.conj(a[i])).coefficient(Irrep()) == Integer(1),
                name + " Frobenius on conj pair");
      ++total;
    }
  }
  o.detail << " " << total << " triples over 6 rings";
}

// 8
void snf_properties(Outcome& o) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> shape(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto dense = oracle::random_matrix(rng, shape(rng), shape(rng), -9, 9);
    const IntMatrix a = IntMatrix::from_dense(dense);
    const SNFResult r = snf(a);
    const std::string t = "matrix " + std::to_string(trial);
    o.require(multiply(multiply(r.U, a), r.V) == r.D, t + " U A V != D");
    o.require(abs(Integer(oracle::bareiss(oracle::to_mpz(r.U.to_dense())).det)) == Integer(1) &&
                  abs(Integer(oracle::bareiss(oracle::to_mpz(r.V.to_dense())).det)) == Integer(1),
              t + " not unimodular");
    bool diagonal = true;
    for (const auto& e : r.D.triplets()) diagonal = diagonal && e.row == e.col;
    o.require(diagonal, t + " D not diagonal");
    for (std::size_t i = 0; i + 1 < r.rank(); ++i) {
      o.require(divides(r.invariant_factors[i], r.invariant_factors[i + 1]), t + " chain");
    }
    o.require(r.rank() == oracle::bareiss(oracle::to_mpz(dense)).rank, t + " rank");
  }
  o.detail << " 300 matrices up to 8x8, rank equals fraction-free rank";
}

// 9
void w_characterization(Outcome& o) {
  const FusionRing g = ring("FO(3)*Z");
  const auto generated = generate_fu_irreps(3, 5);
  std::vector<Irrep> predicate;
  for (const auto& r : g.irreps_up_to(5)) {
    if (is_in_W(r)) predicate.push_back(r);
  }
  o.require(generated == predicate, "generated closure differs from W");
  o.detail << " " << predicate.size() << " words of length <= 5 in both sets";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"PV K-groups of FU(m)", pv_free_unitary},
      {"PV K-groups of free products", pv_free_products},
      {"tree algebra K-theory", tree_k_theory},
      {"divisibility verdicts", divisibility},
      {"Bass-Serre trees", bass_serre},
      {"resolution exactness", resolution},
      {"fusion ring properties", fusion_properties},
      {"Smith normal form properties", snf_properties},
      {"W characterization", w_characterization},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s (%.2fs):%s\n", o.ok ? "PASS" : "FAIL", ++n, name,
                seconds_since(t0), o.detail.str().c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d of %d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
