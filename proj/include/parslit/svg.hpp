#ifndef PARSLIT_SVG_HPP
#define PARSLIT_SVG_HPP

#include <optional>
#include <string>
#include <string_view>

#include "parslit/flat_surface.hpp"
#include "parslit/rational.hpp"
#include "parslit/slit_core.hpp"

namespace parslit {

/// Rectangle of the plane shown in a picture, in surface coordinates.
struct View {
  Rational xmin;
  Rational xmax;
  Rational ymin;
  Rational ymax;
};

/// Parses "XMIN:XMAX:YMIN:YMAX". Errors: ParseError, EmptyView.
View parse_view(std::string_view text);

/// Slit picture of a domain: every slit runs from the left edge of the view
/// to its tip, tips carry their a-value and the two slits of a zero share a
/// colour and a dashed link. Byte-identical for identical input.
std::string render_svg(const ParallelSlitDomain& domain, const std::optional<View>& view = {});

/// Developed picture of a generic grid: the rectangles of the cut surface,
/// the slits it develops onto and the images of the zeros on top.
std::string render_svg(const GluedGrid& grid, const std::optional<View>& view = {});

}  // namespace parslit

#endif  // PARSLIT_SVG_HPP
