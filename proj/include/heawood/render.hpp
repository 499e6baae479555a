// render.hpp
// SVG drawings of embeddings.

#ifndef HEAWOOD_RENDER_HPP
#define HEAWOOD_RENDER_HPP

#include <string>

#include "heawood/chain.hpp"
#include "heawood/incidence.hpp"

namespace heawood {

struct RenderStyle {
    double scale = 200.0;        // pixels per unit length
    double vertex_radius = 6.0;  // pixels
    double label_offset = 9.0;   // pixels, up and to the right of the marker
    double padding = 0.2;        // units around the bounding box
    std::string point_color = "#d62728";
    std::string line_color = "#1f77b4";
    std::string edge_color = "#333333";
};

/// One <line> per flag, one <circle> plus <text> label per vertex. The
/// y axis points up, as in the coordinate tables.
std::string render_svg(const EmbeddingCandidate& e, const IncidenceStructure& inc,
                       const RenderStyle& style = RenderStyle{});

} // namespace heawood

#endif // HEAWOOD_RENDER_HPP
