#pragma once

#include <nlohmann/json.hpp>

#include "fqk/fusion_ring.hpp"
#include "fqk/int_matrix.hpp"
#include "fqk/integer.hpp"
#include "fqk/ktheory.hpp"
#include "fqk/pv.hpp"
#include "fqk/snf.hpp"
#include "fqk/subgroups.hpp"
#include "fqk/tree.hpp"

namespace fqk {

/// Machine integers as JSON numbers, anything wider as a decimal string.
[[nodiscard]] nlohmann::json to_json(const Integer& v);
/// {"rank", "torsion", "generators"}
[[nodiscard]] nlohmann::json to_json(const AbelianGroup& g);
/// {"K0", "K1", "stabilized_at", "route"}
[[nodiscard]] nlohmann::json to_json(const KGroupReport& r);
/// Labeled sparse triplets {"rows", "cols", "entries": [[i, j, v], ...]}.
[[nodiscard]] nlohmann::json to_json(const IntMatrix& m);
/// {"depth", "vertices": [...], "edges": [...]} adjacency form.
[[nodiscard]] nlohmann::json to_json(const BassSerreGraph& g);
[[nodiscard]] nlohmann::json to_json(const FusionRing& ring, const Coset& c);
[[nodiscard]] nlohmann::json to_json(const FusionRing& ring, const FormalSum& s);

/// Reads {"k0_rank", "k1_rank", "actions": {gen: {"k0", "k1"}}, "dims"}.
/// Matrix entries may be numbers or decimal strings.  Throws
/// DomainError("module shape error: ...") on malformed input.
[[nodiscard]] CoefficientModule module_from_json(const nlohmann::json& j);

}  // namespace fqk
