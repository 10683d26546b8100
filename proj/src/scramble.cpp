#include "parslit/scramble.hpp"

#include <random>
#include <string>
#include <utility>

#include "parslit/errors.hpp"

namespace parslit {

namespace {

// Bounded draws written out by hand: std::uniform_int_distribution is not
// specified bit-for-bit, and seeds must reproduce on every platform.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

  Rational proper_fraction() {
    const int q = 2 + below(6);
    return ratio(1 + below(q - 1), q);
  }

  Rational positive_amount() { return ratio(1 + below(5), 1 + below(3)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

GluedGrid insert_fake_wall(const GluedGrid& grid, int c, const Rational& amount) {
  auto cols = grid.columns();
  if (c < 0 || c >= static_cast<int>(cols.size())) {
    throw Error(ErrorCode::InvalidGrid, "no column " + std::to_string(c));
  }
  Column left = cols[static_cast<std::size_t>(c)];
  Column right = left;
  ExtRational cut;
  if (left.lo.is_finite() && left.hi.is_finite()) {
    if (amount <= 0 || amount >= 1) throw Error(ErrorCode::InvalidGrid, "split fraction outside (0,1)");
    cut = ExtRational(Rational(left.lo.value() + amount * (left.hi.value() - left.lo.value())));
  } else {
    if (amount <= 0) throw Error(ErrorCode::InvalidGrid, "split width must be positive");
    if (left.hi.is_finite()) {
      cut = ExtRational(Rational(left.hi.value() - amount));
    } else if (left.lo.is_finite()) {
      cut = ExtRational(Rational(left.lo.value() + amount));
    } else {
      cut = ExtRational(amount);
    }
  }
  left.hi = cut;
  right.lo = cut;
  cols[static_cast<std::size_t>(c)] = std::move(left);
  cols.insert(cols.begin() + c + 1, std::move(right));
  return GluedGrid(std::move(cols), grid.strips());
}

GluedGrid split_strip(const GluedGrid& grid, int s, const Rational& amount) {
  auto strips = grid.strips();
  if (s < 0 || s >= static_cast<int>(strips.size())) {
    throw Error(ErrorCode::InvalidGrid, "no strip " + std::to_string(s));
  }
  Strip lower = strips[static_cast<std::size_t>(s)];
  Strip upper = lower;
  ExtRational cut;
  if (lower.lo.is_finite() && lower.hi.is_finite()) {
    if (amount <= 0 || amount >= 1) throw Error(ErrorCode::InvalidGrid, "split fraction outside (0,1)");
    cut = ExtRational(Rational(lower.lo.value() + amount * (lower.hi.value() - lower.lo.value())));
  } else {
    if (amount <= 0) throw Error(ErrorCode::InvalidGrid, "split height must be positive");
    cut = lower.hi.is_finite() ? ExtRational(Rational(lower.hi.value() - amount))
                               : ExtRational(Rational(lower.lo.value() + amount));
  }
  lower.hi = cut;
  upper.lo = cut;
  strips[static_cast<std::size_t>(s)] = std::move(lower);
  strips.push_back(std::move(upper));
  const int u = static_cast<int>(strips.size()) - 1;

  std::vector<Column> cols;
  for (const auto& col : grid.columns()) {
    std::vector<int> pi = col.pi.one_line();
    pi.push_back(pi[static_cast<std::size_t>(s)]);
    pi[static_cast<std::size_t>(s)] = u;
    cols.push_back({col.lo, col.hi, Permutation(std::move(pi))});
  }
  return GluedGrid(std::move(cols), std::move(strips));
}

GluedGrid relabel_strips(const GluedGrid& grid, const Permutation& relabel) {
  if (relabel.size() != static_cast<std::size_t>(grid.num_strips())) {
    throw Error(ErrorCode::InvalidGrid, "relabeling has the wrong size");
  }
  std::vector<Strip> strips(grid.strips().size());
  for (int s = 0; s < grid.num_strips(); ++s) {
    strips[static_cast<std::size_t>(relabel(s))] = grid.strips()[static_cast<std::size_t>(s)];
  }
  const Permutation inv = relabel.inverse();
  std::vector<Column> cols;
  for (const auto& col : grid.columns()) cols.push_back({col.lo, col.hi, relabel * col.pi * inv});
  return GluedGrid(std::move(cols), std::move(strips));
}

GluedGrid translate(const GluedGrid& grid, const Rational& dx, const Rational& dy) {
  auto cols = grid.columns();
  auto strips = grid.strips();
  for (auto& col : cols) {
    col.lo = col.lo + ExtRational(dx);
    col.hi = col.hi + ExtRational(dx);
  }
  for (auto& st : strips) {
    st.lo = st.lo + ExtRational(dy);
    st.hi = st.hi + ExtRational(dy);
  }
  return GluedGrid(std::move(cols), std::move(strips));
}

GluedGrid scramble(const GluedGrid& grid, std::uint64_t seed) {
  Draw draw(seed);
  enum class Move { FakeWall, SplitStrip };
  std::vector<Move> moves;
  const int walls = 1 + draw.below(3);
  const int splits = 1 + draw.below(3);
  moves.insert(moves.end(), static_cast<std::size_t>(walls), Move::FakeWall);
  moves.insert(moves.end(), static_cast<std::size_t>(splits), Move::SplitStrip);
  for (int i = static_cast<int>(moves.size()) - 1; i > 0; --i) {
    std::swap(moves[static_cast<std::size_t>(i)], moves[static_cast<std::size_t>(draw.below(i + 1))]);
  }

  GluedGrid g = grid;
  for (Move mv : moves) {
    if (mv == Move::FakeWall) {
      const int c = draw.below(g.num_columns());
      const bool finite = g.width(c).is_finite();
      g = insert_fake_wall(g, c, finite ? draw.proper_fraction() : draw.positive_amount());
    } else {
      const int s = draw.below(g.num_strips());
      const bool finite = g.height(s).is_finite();
      g = split_strip(g, s, finite ? draw.proper_fraction() : draw.positive_amount());
    }
  }

  std::vector<int> perm(static_cast<std::size_t>(g.num_strips()));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(draw.below(i + 1))]);
  }
  g = relabel_strips(g, Permutation(std::move(perm)));

  const Rational dx = ratio(draw.below(21) - 10, 1 + draw.below(4));
  const Rational dy = ratio(draw.below(21) - 10, 1 + draw.below(4));
  return translate(g, dx, dy);
}

GluedGrid collapse_strip(const GluedGrid& grid, int s) {
  auto strips = grid.strips();
  auto& st = strips.at(static_cast<std::size_t>(s));
  if (!st.lo.is_finite() || !st.hi.is_finite()) {
    throw Error(ErrorCode::InvalidGrid, "only a finite strip can be collapsed");
  }
  st.hi = st.lo;
  return GluedGrid(grid.columns(), std::move(strips));
}

}  // namespace parslit
