#pragma once

#include <string>
#include <vector>

#include "heyland/performance.hpp"

namespace heyland {

struct RenderOptions {
    double width_px = 2400.0;
    double height_px = 1800.0;
    double margin_px = 48.0;
    bool show_full_circle = false;
    std::vector<double> show_slip_lines;
    bool show_labels = true;
    std::string title = "Heyland circle diagram";
};

/// Affine map from the current plane to canvas pixels (y inverted).
/// Scale and origin are snapped to 3 decimals so the emitted attributes
/// describe the map exactly.
struct CanvasMap {
    double px_per_ampere = 0.0;
    double origin_x = 0.0;
    double origin_y = 0.0;

    double to_px_x(double x) const { return origin_x + px_per_ampere * x; }
    double to_px_y(double y) const { return origin_y - px_per_ampere * y; }
};

CanvasMap fit_canvas(const HeylandDiagram& diag, const RenderOptions& opts);

/// Standalone SVG 1.1 document. Output is byte-deterministic for identical inputs.
std::string render_svg(const HeylandDiagram& diag, const ExtremalSet& extremals,
                       const RenderOptions& opts);

} // namespace heyland
