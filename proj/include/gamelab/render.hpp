#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gamelab/ocn_sim.hpp"

namespace gamelab {

enum class ImageFormat { Pgm, Svg };

/// m grows to the right and n upwards.
struct RenderSpec {
    ImageFormat format = ImageFormat::Pgm;
    unsigned cell_size = 1;
    bool frontier = false;  // SVG only
    bool fit_line = false;  // SVG only
};

/// Image of the view [0,R)^2 of plane (p,q). Plain PGM has black = 0 and
/// white = 1 with the top row holding the highest level.
std::string render_plane(const PlaneColoring& coloring, std::size_t p, std::size_t q,
                         const RenderSpec& spec);

/// Rank matrix of the view as text, top row first; "." marks black.
std::string render_ranks(const PlaneColoring& coloring, std::size_t p, std::size_t q);

/// One-line summary of the plane's belt fit.
std::string fit_summary(const PlaneColoring& coloring, std::size_t p, std::size_t q);

/// Writes plane_<p>_<q>.<ext> for every plane plus manifest.txt into `dir`
/// and returns the file names written, manifest last. Throws
/// std::invalid_argument on an empty path and std::runtime_error naming the
/// path on I/O failure.
std::vector<std::string> render_all(const std::vector<std::string>& state_names,
                                    const PlaneColoring& coloring, const std::string& dir,
                                    const RenderSpec& spec);

}  // namespace gamelab
