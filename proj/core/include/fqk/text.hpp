#pragma once

#include <string>
#include <string_view>

#include "fqk/fusion_ring.hpp"
#include "fqk/irrep.hpp"

namespace fqk {

/// spec   := factor ("*" factor)*
/// factor := "FO(" int ")" | "FU(" int ")" | "Z"
///
/// Whitespace between tokens is ignored.  Throws SyntaxError with the byte
/// offset and expected tokens, or DomainError for block sizes below 2.
[[nodiscard]] RingSpec parse_spec(std::string_view text);

/// Dot-separated letters, each "<factor>:" followed by "u<k>" (FO), "z^<k>"
/// (Z), or "u" / "ubar" / "[ambient word]" (FU).  The factor prefix may be
/// dropped in single-block rings, and "e" is the trivial word.  A lone
/// trivial letter ("u0", "z^0") also denotes the trivial word.
[[nodiscard]] Irrep parse_word(std::string_view text, const FusionRing& ring);

[[nodiscard]] std::string render(const FusionRing& ring, const Irrep& r);
[[nodiscard]] std::string render(const FusionRing& ring, const Letter& l);
/// "u0 + u2", "2*u1 - e"; the empty sum renders as "0".
[[nodiscard]] std::string render(const FusionRing& ring, const FormalSum& s);

}  // namespace fqk
