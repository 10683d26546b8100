#ifndef PARSLIT_UNIFORMIZER_HPP
#define PARSLIT_UNIFORMIZER_HPP

#include <vector>

#include "parslit/flat_surface.hpp"
#include "parslit/rational.hpp"
#include "parslit/slit_core.hpp"

namespace parslit {

/// One column-width piece of a separatrix: it runs along the bottom edge of
/// `upper_strip` (= top edge of `lower_strip`) in `column`.
struct SeamSegment {
  int column;
  int lower_strip;
  int upper_strip;
};

/// A leftward horizontal separatrix from a simple zero to a left end.
/// Both strips stay the same along the whole ray because every wall vertex
/// it passes is flat.
struct Ray {
  int zero;  // index into CriticalGraph::zeros
  std::vector<SeamSegment> segments;  // right to left, ends in column 0
};

struct CriticalGraph {
  std::vector<VertexClass> zeros;
  std::vector<Ray> rays;  // rays 2k and 2k + 1 leave zeros[k]
};

/// Traces the two leftward separatrices of every zero. Requires every cone
/// point to be simple. Errors: NotSimple, SaddleConnection.
CriticalGraph trace_critical_graph(const GluedGrid& grid);

/// A slit of the developed picture: the half-line (-inf, tip_x] x {level}.
struct DevelopedSlit {
  Rational level;
  Rational tip_x;
  int zero;
  /// Ray whose lower side is this slit's lower bank.
  int lower_bank_ray;
  /// Ray whose upper side is this slit's upper bank.
  int upper_bank_ray;
};

/// The complement of the critical graph laid out in the plane.
///
/// All gluings are vertical translations, so each rectangle moves only up or
/// down: `offset[c * S + s]` is the vertical shift of rectangle (c, s).
struct Development {
  int num_columns = 0;
  int num_strips = 0;
  std::vector<Rational> offset;
  /// Developed images of every corner of every zero (one entry per zero).
  std::vector<std::vector<ComplexRational>> zero_images;
  /// Per ray: developed level of the side below it and of the side above it.
  std::vector<Rational> ray_lower_level;
  std::vector<Rational> ray_upper_level;
  std::vector<DevelopedSlit> slits;  // sorted by level

  const Rational& offset_of(int c, int s) const {
    return offset[static_cast<std::size_t>(c * num_strips + s)];
  }
};

/// Spanning-tree layout of the cut complex with closure and overlap checks.
/// Errors: HolonomyMismatch, OverlapDetected, NonGeneric (slit levels do not
/// pair up as a slit domain).
Development develop(const GluedGrid& grid, const CriticalGraph& graph);

/// Merges every run of adjacent columns with equal permutations.
GluedGrid merge_fake_walls(const GluedGrid& grid);

/// Merges the fake wall between columns c and c + 1 (pi must agree).
GluedGrid merge_wall(const GluedGrid& grid, int c);

/// The Hilbert uniformization: canonical parallel slit domain of a generic
/// grid. Errors: NonGeneric (with the diagnosis as cause), and development errors.
ParallelSlitDomain uniformize(const GluedGrid& grid);

/// Period numbers z_{k,l}; zeros are numbered by decreasing critical value.
///
/// Each zero is accessed at the tip of its upper slit, so for k != l
/// z_{k,l} = upper_tip(l) - upper_tip(k), and z_{k,k} = upper_tip(k) - lower_tip(k).
struct PeriodMatrix {
  std::vector<std::vector<ComplexRational>> z;

  std::size_t size() const noexcept { return z.size(); }
  const ComplexRational& at(std::size_t k, std::size_t l) const { return z.at(k).at(l); }
};

PeriodMatrix periods(const Development& dev);

}  // namespace parslit

#endif  // PARSLIT_UNIFORMIZER_HPP
