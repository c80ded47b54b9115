#include "fqk/pv.hpp"

#include <limits>

#include "fqk/error.hpp"

namespace fqk {

PvSpec PvSpec::from_ring(const FusionRing& ring) {
  PvSpec spec;
  for (const fqk::Block& b : ring.blocks()) {
    if (b.kind == BlockKind::Z) {
      throw DomainError("the PV route covers free products of FU and FO blocks; " +
                        ring.name() + " has a Z factor");
    }
    spec.blocks.push_back({b.kind == BlockKind::FU, b.size});
  }
  return spec;
}

std::size_t PvSpec::unitary_count() const {
  std::size_t k = 0;
  for (const auto& b : blocks) k += b.unitary ? 1 : 0;
  return k;
}

std::size_t PvSpec::orthogonal_count() const {
  return blocks.size() - unitary_count();
}

bool PvSpec::has_fo2() const {
  for (const auto& b : blocks) {
    if (!b.unitary && b.size == 2) return true;
  }
  return false;
}

std::vector<Generator> generator_alphabet(const PvSpec& spec) {
  const bool number_u = spec.unitary_count() > 1;
  const bool number_v = spec.orthogonal_count() > 1;
  std::vector<Generator> out;
  std::size_t iu = 0;
  std::size_t iv = 0;
  for (const auto& b : spec.blocks) {
    if (b.size < 1) throw DomainError("module shape error: block size below 1");
    if (b.unitary) {
      const std::string tag = number_u ? std::to_string(++iu) : "";
      const std::size_t at = out.size();
      out.push_back({"u" + tag, b.size, at + 1});
      out.push_back({"ubar" + tag, b.size, at});
    } else {
      const std::string tag = number_v ? std::to_string(++iv) : "";
      out.push_back({"v" + tag, b.size, out.size()});
    }
  }
  return out;
}

CoefficientModule trivial_module(const PvSpec& spec) {
  CoefficientModule m;
  m.k0_rank = 1;
  m.k1_rank = 0;
  for (const auto& g : generator_alphabet(spec)) {
    m.actions[g.label] = {DenseMatrix{{Integer(g.dim)}}, DenseMatrix{}};
  }
  return m;
}

namespace {

std::vector<std::string> module_labels(std::size_t rank, char prefix,
                                       bool unit_name) {
  if (rank == 1 && unit_name) return {"1"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rank; ++i) {
    out.push_back(std::string(1, prefix) + std::to_string(i + 1));
  }
  return out;
}

void check_square(const DenseMatrix& a, std::size_t rank, const std::string& what) {
  if (a.size() != rank) {
    throw DomainError("module shape error: " + what + " has " +
                      std::to_string(a.size()) + " rows, expected " +
                      std::to_string(rank));
  }
  for (const auto& row : a) {
    if (row.size() != rank) {
      throw DomainError("module shape error: " + what + " is not " +
                        std::to_string(rank) + "x" + std::to_string(rank));
    }
  }
}

IntMatrix sigma_block(const std::vector<Generator>& alphabet,
                      const CoefficientModule& a, bool odd) {
  const std::size_t rank = odd ? a.k1_rank : a.k0_rank;
  const std::vector<std::string> rows =
      module_labels(rank, odd ? 'b' : 'a', !odd);
  std::vector<std::string> cols;
  for (const auto& g : alphabet) {
    for (const auto& r : rows) cols.push_back(rank == 1 ? g.label : g.label + "." + r);
  }
  IntMatrix::Builder b{Basis(rows), Basis(cols)};
  for (const auto& g : alphabet) {
    const auto& act = a.actions.at(g.label);
    const DenseMatrix& m = odd ? act.k1 : act.k0;
    for (std::size_t c = 0; c < rank; ++c) {
      for (std::size_t r = 0; r < rank; ++r) {
        Integer v = m[r][c];
        if (r == c) v -= Integer(g.dim);
        b.add(r, std::move(v));
      }
      b.finish_column();
    }
  }
  return std::move(b).build();
}

}  // namespace

PvSigma pv_sigma(const PvSpec& spec, const CoefficientModule& a) {
  const std::vector<Generator> alphabet = generator_alphabet(spec);
  for (const auto& g : alphabet) {
    const auto it = a.actions.find(g.label);
    if (it == a.actions.end()) {
      throw DomainError("module shape error: no action given for generator " +
                        g.label);
    }
    check_square(it->second.k0, a.k0_rank, "K0 action of " + g.label);
    check_square(it->second.k1, a.k1_rank, "K1 action of " + g.label);
    const auto d = a.dims.find(g.label);
    if (d != a.dims.end() && !(d->second == Integer(g.dim))) {
      throw DomainError("module shape error: dim(" + g.label + ") is " +
                        std::to_string(g.dim) + " for this group, module says " +
                        d->second.to_string());
    }
  }
  for (const auto& [label, act] : a.actions) {
    bool known = false;
    for (const auto& g : alphabet) known = known || g.label == label;
    if (!known) {
      throw DomainError("module shape error: unknown generator " + label);
    }
  }
  return {sigma_block(alphabet, a, false), sigma_block(alphabet, a, true)};
}

KGroupReport pv_kgroups(const PvSpec& spec, const CoefficientModule& a) {
  const PvSigma s = pv_sigma(spec, a);
  KerCokerOptions dense;
  dense.dense_limit = std::numeric_limits<std::size_t>::max();
  const KerCoker even = ker_coker(s.sigma0, dense);
  const KerCoker odd = ker_coker(s.sigma1, dense);

  auto assemble = [](const KerCoker& cok, const KerCoker& ker,
                     const IntMatrix& ker_matrix) {
    AbelianGroup g;
    g.rank = cok.cokernel.rank + ker.kernel_rank;
    g.torsion = cok.cokernel.torsion;
    const auto& cg = cok.cokernel.generators;
    g.generators.assign(cg.begin(), cg.begin() + static_cast<std::ptrdiff_t>(
                                                     cok.cokernel.rank));
    for (const auto& v : *ker.kernel_basis) {
      g.generators.push_back(render_combination(v, ker_matrix.col_basis()));
    }
    g.generators.insert(g.generators.end(),
                        cg.begin() + static_cast<std::ptrdiff_t>(cok.cokernel.rank),
                        cg.end());
    return g;
  };

  KGroupReport report;
  report.route = "pv_sequence";
  report.k0 = assemble(even, odd, s.sigma1);
  report.k1 = assemble(odd, even, s.sigma0);
  return report;
}

}  // namespace fqk
