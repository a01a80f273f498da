#ifndef PADIC_RENDER_HPP
#define PADIC_RENDER_HPP

#include <string>

#include "padic/newton.hpp"

namespace padic {

/// Grid plot of the lower hull with labeled endpoints.
std::string polygon_to_ascii(const NewtonPolygon& np);

/// Standalone SVG with a fixed viewBox, axes in v_K units and vertices
/// annotated "(index, val)".
std::string polygon_to_svg(const NewtonPolygon& np);

}  // namespace padic

#endif
