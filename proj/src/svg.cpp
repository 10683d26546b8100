#include "parslit/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

#include "parslit/errors.hpp"
#include "parslit/uniformizer.hpp"

namespace parslit {

View parse_view(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    const auto piece = text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start);
    parts.push_back(parse_rational(piece));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) {
    throw Error(ErrorCode::ParseError, "view must be XMIN:XMAX:YMIN:YMAX, got '" + std::string(text) + "'");
  }
  View v{parts[0], parts[1], parts[2], parts[3]};
  if (v.xmin >= v.xmax || v.ymin >= v.ymax) {
    throw Error(ErrorCode::EmptyView, "view '" + std::string(text) + "' has no area");
  }
  return v;
}

namespace {

constexpr double kWidthPx = 800.0;
constexpr std::array<const char*, 8> kPalette{"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad",
                                              "#d35400", "#16a085", "#7f8c8d", "#b7950b"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

class Canvas {
 public:
  explicit Canvas(const View& v) : v_(v) {
    scale_ = kWidthPx / Rational(v.xmax - v.xmin).get_d();
    height_ = scale_ * Rational(v.ymax - v.ymin).get_d();
  }

  double px(const Rational& x) const { return Rational(x - v_.xmin).get_d() * scale_; }
  double py(const Rational& y) const { return Rational(v_.ymax - y).get_d() * scale_; }

  bool contains_y(const Rational& y) const { return v_.ymin <= y && y <= v_.ymax; }
  const View& view() const { return v_; }

  std::string open() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidthPx) << "\" height=\""
       << num(height_) << "\" viewBox=\"0 0 " << num(kWidthPx) << " " << num(height_) << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidthPx) << "\" height=\"" << num(height_)
       << "\" fill=\"white\"/>\n";
    return os.str();
  }

 private:
  View v_;
  double scale_ = 1;
  double height_ = 1;
};

// Clips [lo, hi] to [vmin, vmax]; false if nothing is left.
bool clip(const ExtRational& lo, const ExtRational& hi, const Rational& vmin, const Rational& vmax, Rational& out_lo,
          Rational& out_hi) {
  out_lo = lo.is_finite() ? std::max(lo.value(), vmin) : vmin;
  out_hi = hi.is_finite() ? std::min(hi.value(), vmax) : vmax;
  if (lo.is_pos_inf() || hi.is_neg_inf()) return false;
  return out_lo < out_hi;
}

View default_view(const Development& dev) {
  Rational xmin = dev.slits.front().tip_x, xmax = xmin;
  Rational ymin = dev.slits.front().level, ymax = ymin;
  for (const auto& s : dev.slits) {
    xmin = std::min(xmin, s.tip_x);
    xmax = std::max(xmax, s.tip_x);
    ymin = std::min(ymin, s.level);
    ymax = std::max(ymax, s.level);
  }
  return {xmin - 2, xmax + 1, ymin - 1, ymax + 1};
}

void draw_slits(std::ostringstream& os, const Canvas& cv, const Development& dev) {
  std::vector<int> order;  // zeros by decreasing tip x
  for (const auto& s : dev.slits) {
    if (std::find(order.begin(), order.end(), s.zero) == order.end()) order.push_back(s.zero);
  }
  auto tip_of = [&](int z) {
    for (const auto& s : dev.slits) {
      if (s.zero == z) return s.tip_x;
    }
    return Rational(0);
  };
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return tip_of(p) > tip_of(q); });

  const View& v = cv.view();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const char* colour = kPalette[k % kPalette.size()];
    std::vector<Rational> levels;
    for (const auto& s : dev.slits) {
      if (s.zero == order[k]) levels.push_back(s.level);
    }
    std::sort(levels.begin(), levels.end());
    const Rational tip = tip_of(order[k]);
    os << "<g class=\"pair\" id=\"zero-" << (k + 1) << "\" stroke=\"" << colour << "\" fill=\"" << colour << "\">\n";
    for (const auto& y : levels) {
      if (!cv.contains_y(y) || tip <= v.xmin) continue;
      const Rational right = std::min(tip, v.xmax);
      os << "  <line class=\"slit\" x1=\"" << num(cv.px(v.xmin)) << "\" y1=\"" << num(cv.py(y)) << "\" x2=\""
         << num(cv.px(right)) << "\" y2=\"" << num(cv.py(y)) << "\" stroke-width=\"2\"/>\n";
      if (tip <= v.xmax) {
        os << "  <circle class=\"tip\" cx=\"" << num(cv.px(tip)) << "\" cy=\"" << num(cv.py(y)) << "\" r=\"3\"/>\n";
      }
    }
    if (levels.size() == 2 && v.xmin <= tip && tip <= v.xmax) {
      const Rational lo = std::max(levels[0], v.ymin), hi = std::min(levels[1], v.ymax);
      if (lo < hi) {
        os << "  <line class=\"link\" x1=\"" << num(cv.px(tip)) << "\" y1=\"" << num(cv.py(lo)) << "\" x2=\""
           << num(cv.px(tip)) << "\" y2=\"" << num(cv.py(hi)) << "\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
      }
      if (cv.contains_y(levels[1])) {
        os << "  <text x=\"" << num(cv.px(tip) + 5) << "\" y=\"" << num(cv.py(levels[1]) - 5)
           << "\" font-family=\"monospace\" font-size=\"12\" stroke=\"none\">a" << (k + 1) << "="
           << format_rational(tip) << "</text>\n";
      }
    }
    os << "</g>\n";
  }
}

}  // namespace

std::string render_svg(const ParallelSlitDomain& domain, const std::optional<View>& view) {
  const GluedGrid grid = glue(domain);
  const Development dev = develop(grid, trace_critical_graph(grid));
  const Canvas cv(view.value_or(default_view(dev)));
  std::ostringstream os;
  os << cv.open();
  draw_slits(os, cv, dev);
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const GluedGrid& input, const std::optional<View>& view) {
  const GluedGrid grid = merge_fake_walls(input);
  const GenericityReport rep = is_generic(grid);
  if (!rep.generic) {
    throw Error(ErrorCode::NonGeneric, "cannot develop: " + std::string(to_string(rep.diagnosis)) + ": " + rep.detail);
  }
  const Development dev = develop(grid, trace_critical_graph(grid));
  const Canvas cv(view.value_or(default_view(dev)));
  const View& v = cv.view();
  std::ostringstream os;
  os << cv.open();

  os << "<g class=\"rectangles\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (int c = 0; c < grid.num_columns(); ++c) {
    const auto& col = grid.columns()[static_cast<std::size_t>(c)];
    for (int s = 0; s < grid.num_strips(); ++s) {
      const auto& st = grid.strips()[static_cast<std::size_t>(s)];
      const ExtRational off(dev.offset_of(c, s));
      Rational x0, x1, y0, y1;
      if (!clip(col.lo, col.hi, v.xmin, v.xmax, x0, x1)) continue;
      if (!clip(st.lo + off, st.hi + off, v.ymin, v.ymax, y0, y1)) continue;
      os << "  <rect x=\"" << num(cv.px(x0)) << "\" y=\"" << num(cv.py(y1)) << "\" width=\""
         << num(cv.px(x1) - cv.px(x0)) << "\" height=\"" << num(cv.py(y0) - cv.py(y1)) << "\"/>\n";
    }
  }
  os << "</g>\n";

  draw_slits(os, cv, dev);

  os << "<g class=\"zeros\" fill=\"black\">\n";
  for (const auto& images : dev.zero_images) {
    for (const auto& z : images) {
      if (z.re < v.xmin || z.re > v.xmax || !cv.contains_y(z.im)) continue;
      os << "  <rect x=\"" << num(cv.px(z.re) - 2) << "\" y=\"" << num(cv.py(z.im) - 2)
         << "\" width=\"4\" height=\"4\"/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace parslit
