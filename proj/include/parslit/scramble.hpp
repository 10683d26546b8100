#ifndef PARSLIT_SCRAMBLE_HPP
#define PARSLIT_SCRAMBLE_HPP

#include <cstdint>
#include <vector>

#include "parslit/flat_surface.hpp"

namespace parslit {

// Equivalence-preserving presentation moves. Each returns a grid describing
// the same translation surface with the same end labels.

/// Splits column c into two columns with the same permutation. For a finite
/// column the left piece gets `fraction` (0 < fraction < 1) of the width; for
/// an infinite column the new finite piece next to the wall has width `amount`.
GluedGrid insert_fake_wall(const GluedGrid& grid, int c, const Rational& amount);

/// Splits strip s at a new level. The lower piece keeps index s, the upper
/// piece is appended as a new strip glued on top of it in every column.
/// `amount` is a fraction of the height for finite strips, or the height of
/// the new finite piece for the two open strips.
GluedGrid split_strip(const GluedGrid& grid, int s, const Rational& amount);

/// Renames strip s to relabel(s), conjugating every column permutation.
GluedGrid relabel_strips(const GluedGrid& grid, const Permutation& relabel);

/// Moves the whole picture by (dx, dy).
GluedGrid translate(const GluedGrid& grid, const Rational& dx, const Rational& dy);

/// Seed-determined mix of fake walls, strip splits, a relabeling and a
/// translation. Deterministic across platforms.
GluedGrid scramble(const GluedGrid& grid, std::uint64_t seed);

/// Degenerate move used to build non-generic test inputs: squashes finite
/// strip s to height 0, which makes two seam levels coincide. Not an equivalence.
GluedGrid collapse_strip(const GluedGrid& grid, int s);

}  // namespace parslit

#endif  // PARSLIT_SCRAMBLE_HPP
