#ifndef PARSLIT_FLAT_SURFACE_HPP
#define PARSLIT_FLAT_SURFACE_HPP

#include <string>
#include <vector>

#include "parslit/permutation.hpp"
#include "parslit/rational.hpp"
#include "parslit/slit_core.hpp"

namespace parslit {

/// A vertical band [lo, hi] of the grid with its vertical gluing: the top
/// edge of strip s glues to the bottom edge of strip pi(s).
struct Column {
  ExtRational lo;
  ExtRational hi;
  Permutation pi;

  friend bool operator==(const Column&, const Column&) = default;
};

/// A horizontal band present in every column. `end_label` is the puncture
/// label of the left end that this strip belongs to in the leftmost column.
struct Strip {
  ExtRational lo;
  ExtRational hi;
  int end_label = 0;

  friend bool operator==(const Strip&, const Strip&) = default;
};

/// A translation surface presented as columns x strips of axis-parallel
/// rectangles. Rectangle (c, s) sits at [col c] x [strip s] in its own chart;
/// its right edge glues to the left edge of (c + 1, s) and its top edge to the
/// bottom edge of (c, pi_c(s)), both by translations, so omega = dz globally.
///
/// Invariants checked on construction:
///  - columns tile the real line left to right, finite ones with width > 0;
///  - exactly one strip is open below and one open above, every finite strip
///    has height >= 0 (height 0 is admitted so degenerate presentations can
///    be expressed and diagnosed, see is_generic);
///  - every pi_c is a permutation of the strip indices sending the top-open
///    strip to the bottom-open strip.
class GluedGrid {
 public:
  GluedGrid(std::vector<Column> columns, std::vector<Strip> strips);

  const std::vector<Column>& columns() const noexcept { return columns_; }
  const std::vector<Strip>& strips() const noexcept { return strips_; }
  int num_columns() const noexcept { return static_cast<int>(columns_.size()); }
  int num_strips() const noexcept { return static_cast<int>(strips_.size()); }
  /// Walls sit between consecutive columns; wall w separates columns w-1 and w.
  int num_walls() const noexcept { return num_columns() - 1; }

  int bottom_strip() const noexcept { return bottom_; }
  int top_strip() const noexcept { return top_; }
  const Permutation& pi(int c) const { return columns_.at(static_cast<std::size_t>(c)).pi; }

  ExtRational width(int c) const;
  ExtRational height(int s) const;
  /// x-coordinate of wall w (1 <= w <= num_walls()).
  const Rational& wall_x(int w) const;
  /// Finite wall x-positions, left to right.
  std::vector<Rational> wall_positions() const;
  /// Distinct finite strip boundaries, ascending.
  std::vector<Rational> level_positions() const;

  friend bool operator==(const GluedGrid&, const GluedGrid&) = default;

 private:
  std::vector<Column> columns_;
  std::vector<Strip> strips_;
  int bottom_ = -1;
  int top_ = -1;
};

/// The gluing construction: slit normal form of a parallel slit domain.
/// Column i of the cell data (indexed right to left) becomes internal column
/// h - i; strip j stays strip j.
GluedGrid glue(const ParallelSlitDomain& x);

// ---------------------------------------------------------------------------
// Cone points

enum class CornerPos { BL, BR, TR, TL };

struct Corner {
  int column;
  int strip;
  CornerPos pos;

  friend bool operator==(const Corner&, const Corner&) = default;
};

/// One point of the surface sitting on a wall, with all grid corners meeting
/// there in counterclockwise order.
struct VertexClass {
  int wall = 0;
  Rational x;
  std::vector<Corner> corners;  // starts at a BL corner, ccw
  std::vector<Rational> levels;  // chart y-values of the BL corners, in walk order
  /// Cone angle is 2 pi k.
  int k() const { return static_cast<int>(corners.size()) / 4; }
};

struct ConeData {
  std::vector<VertexClass> classes;  // every finite vertex, flat ones included

  /// Classes with k >= 2.
  std::vector<VertexClass> zeros() const;
  /// Sum over classes of (k - 1): the total order of the zeros of omega.
  int total_order() const;
};

/// Vertex classes by the corner-rotation walk around every finite wall corner.
ConeData cone_points(const GluedGrid& grid);

// ---------------------------------------------------------------------------
// Ends and residues

struct End {
  int label = 0;
  int pole_order = 1;
  /// 2 pi times the residue. For a left cylinder this is its circumference.
  Rational residue_2pi;
  /// Strips of the leftmost column forming this end, in gluing order.
  std::vector<int> strips;
};

struct EndData {
  std::vector<End> ends;  // indexed by label: 0 = dipole end Q, 1..m = P_i

  int m() const { return static_cast<int>(ends.size()) - 1; }
  Rational residue_sum_2pi() const;
};

/// Errors: EndStructure.
EndData ends(const GluedGrid& grid);

// ---------------------------------------------------------------------------
// Genus

/// g = (sum(k - 1) - m) / 2. Errors: NonIntegralGenus, EndStructure.
int genus_via_cones(const GluedGrid& grid);

struct EulerData {
  long vertices = 0;
  long edges = 0;
  long faces = 0;
  long circuits = 0;  // boundary circuits of the truncated surface
  long chi = 0;       // after capping every circuit with a disk
  int genus = 0;
};

/// Truncates all infinite extents, counts V, E, F and boundary circuits by
/// edge identification, caps each circuit with a disk and reads the genus off
/// the Euler characteristic. Errors: BoundaryCircuitMismatch, NonIntegralGenus.
EulerData euler_data(const GluedGrid& grid);
int genus_via_euler(const GluedGrid& grid);

/// Checks that the grid has exactly the genus and puncture count of `label`.
/// Errors: SurfaceTypeMismatch.
void check_surface_type(const GluedGrid& grid, const CellLabel& label);

// ---------------------------------------------------------------------------
// Periods

enum class Direction { Up, Down, Left, Right };

/// Leaving rectangle (column, strip) through the side facing `dir`.
struct Crossing {
  int column;
  int strip;
  Direction dir;
};

using Loop = std::vector<Crossing>;

/// Sum of gluing translations along a closed sequence of crossings.
/// Errors: NotClosed.
ComplexRational period_of_loop(const GluedGrid& grid, const Loop& loop);

/// Core loop of a left cylinder: climbs through its strips in the leftmost column.
Loop cylinder_core_loop(const GluedGrid& grid, const End& end);

/// Fundamental cycles of a spanning tree of the rectangle adjacency graph;
/// together they generate the first homology of the punctured surface.
std::vector<Loop> homology_loops(const GluedGrid& grid);

// ---------------------------------------------------------------------------
// Genericity

enum class Diagnosis {
  Generic,
  CoincidentLevels,      // a finite strip of height 0 collapses two seam levels
  NoZeros,               // the surface has no zero, so it is not in any cell
  NonSimpleOrColocated,  // a zero of order >= 2, or two zeros on one wall
  SaddleConnection,      // a leftward separatrix runs into another zero
};

std::string_view to_string(Diagnosis d);

struct GenericityReport {
  bool generic = false;
  Diagnosis diagnosis = Diagnosis::Generic;
  std::string detail;
};

/// Never throws on a valid grid; the outcome is in the report.
GenericityReport is_generic(const GluedGrid& grid);

}  // namespace parslit

#endif  // PARSLIT_FLAT_SURFACE_HPP
