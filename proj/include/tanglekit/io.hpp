#pragma once

// Text formats: tangle notation "[3 2 -3]" / "[inf]", diagram JSON and a
// coarse ASCII picture of twist regions.

#include <string>

#include "tanglekit/tangles.hpp"

namespace tanglekit {

// Grammar: '[' integer+ ']' with whitespace separators, or "[inf]".
// Malformed input throws "parse error at column C: ..." (1-based).
RationalTangle parse_tangle_notation(const std::string& s);

/**
 * @brief Diagram from JSON text.
 *
 * {"crossings": [[e1, e2, e3, e4, "+"], ...],
 *  "boundary": {"NW": e, "NE": e, "SW": e, "SE": e}
 *           or {"top": [...], "bottom": [...]},
 *  "winding": {"edge": w}, "joins": [[from, to, w]], "free_loops": [w],
 *  "annulus": false}
 *
 * Edges are listed counterclockwise. "+" puts e1 and e3 on the under
 * strand; "-" puts e2 and e4 there.
 */
PlanarTangleDiagram diagram_from_json(const std::string& text);
std::string diagram_to_json(const PlanarTangleDiagram& d);

std::string render_ascii(const RationalTangle& t);

}  // namespace tanglekit
