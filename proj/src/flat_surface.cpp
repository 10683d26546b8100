#include "parslit/flat_surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "parslit/errors.hpp"

namespace parslit {

namespace {

[[noreturn]] void bad_grid(const std::string& what) { throw Error(ErrorCode::InvalidGrid, what); }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

GluedGrid::GluedGrid(std::vector<Column> columns, std::vector<Strip> strips)
    : columns_(std::move(columns)), strips_(std::move(strips)) {
  if (columns_.empty()) bad_grid("a grid needs at least one column");
  if (!columns_.front().lo.is_neg_inf()) bad_grid("leftmost column must extend to -inf");
  if (!columns_.back().hi.is_pos_inf()) bad_grid("rightmost column must extend to +inf");
  for (std::size_t c = 0; c + 1 < columns_.size(); ++c) {
    if (!columns_[c].hi.is_finite()) bad_grid("interior wall at infinity");
    if (columns_[c].hi != columns_[c + 1].lo) bad_grid("columns do not tile the line");
  }
  for (const auto& col : columns_) {
    if (col.lo.is_finite() && col.hi.is_finite() && !(col.lo < col.hi)) {
      bad_grid("finite column with non-positive width");
    }
  }

  if (strips_.size() < 2) bad_grid("a grid needs a bottom-open and a top-open strip");
  for (std::size_t s = 0; s < strips_.size(); ++s) {
    const auto& st = strips_[s];
    if (st.lo.is_pos_inf() || st.hi.is_neg_inf()) bad_grid("strip bounds in the wrong order");
    if (st.lo.is_neg_inf() && st.hi.is_pos_inf()) bad_grid("strip open on both sides");
    if (st.lo.is_neg_inf()) {
      if (bottom_ >= 0) bad_grid("more than one bottom-open strip");
      bottom_ = static_cast<int>(s);
    } else if (st.hi.is_pos_inf()) {
      if (top_ >= 0) bad_grid("more than one top-open strip");
      top_ = static_cast<int>(s);
    } else if (st.hi < st.lo) {
      bad_grid("finite strip with negative height");
    }
    if (st.end_label < 0) bad_grid("negative end label");
  }
  if (bottom_ < 0 || top_ < 0) bad_grid("missing bottom-open or top-open strip");

  for (const auto& col : columns_) {
    if (col.pi.size() != strips_.size()) bad_grid("column permutation has the wrong size");
    if (col.pi(top_) != bottom_) bad_grid("column permutation must send the top strip to the bottom strip");
  }
}

ExtRational GluedGrid::width(int c) const {
  const auto& col = columns_.at(static_cast<std::size_t>(c));
  if (!col.lo.is_finite() || !col.hi.is_finite()) return ExtRational::pos_inf();
  return col.hi - col.lo;
}

ExtRational GluedGrid::height(int s) const {
  const auto& st = strips_.at(static_cast<std::size_t>(s));
  if (!st.lo.is_finite() || !st.hi.is_finite()) return ExtRational::pos_inf();
  return st.hi - st.lo;
}

const Rational& GluedGrid::wall_x(int w) const {
  return columns_.at(static_cast<std::size_t>(w)).lo.value();
}

std::vector<Rational> GluedGrid::wall_positions() const {
  std::vector<Rational> xs;
  for (int w = 1; w <= num_walls(); ++w) xs.push_back(wall_x(w));
  return xs;
}

std::vector<Rational> GluedGrid::level_positions() const {
  std::vector<Rational> ys;
  for (const auto& st : strips_) {
    if (st.lo.is_finite()) ys.push_back(st.lo.value());
    if (st.hi.is_finite()) ys.push_back(st.hi.value());
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

GluedGrid glue(const ParallelSlitDomain& x) {
  const int h = x.label.h();
  const auto& a = x.coords.a();  // a[k] = a_{k+1}
  const auto& b = x.coords.b();  // b[k] = b_{k+1}

  std::vector<Column> columns;
  for (int p = 0; p <= h; ++p) {
    const int i = h - p;  // column index right to left
    Column col;
    col.lo = (i == h) ? ExtRational::neg_inf() : ExtRational(a[static_cast<std::size_t>(i)]);
    col.hi = (i == 0) ? ExtRational::pos_inf() : ExtRational(a[static_cast<std::size_t>(i - 1)]);
    col.pi = x.label.sigma(i);
    columns.push_back(std::move(col));
  }

  std::vector<Strip> strips;
  for (int j = 0; j <= 2 * h; ++j) {
    Strip st;
    st.lo = (j == 0) ? ExtRational::neg_inf() : ExtRational(b[static_cast<std::size_t>(j - 1)]);
    st.hi = (j == 2 * h) ? ExtRational::pos_inf() : ExtRational(b[static_cast<std::size_t>(j)]);
    st.end_label = x.label.label_of(j);
    strips.push_back(std::move(st));
  }
  return GluedGrid(std::move(columns), std::move(strips));
}

// ---------------------------------------------------------------------------

std::vector<VertexClass> ConeData::zeros() const {
  std::vector<VertexClass> out;
  std::copy_if(classes.begin(), classes.end(), std::back_inserter(out),
               [](const VertexClass& v) { return v.k() >= 2; });
  return out;
}

int ConeData::total_order() const {
  int sum = 0;
  for (const auto& v : classes) sum += v.k() - 1;
  return sum;
}

ConeData cone_points(const GluedGrid& grid) {
  ConeData data;
  const int S = grid.num_strips();
  for (int w = 1; w <= grid.num_walls(); ++w) {
    const Permutation& left = grid.pi(w - 1);
    const Permutation& right = grid.pi(w);
    const Permutation left_inv = left.inverse();
    std::vector<bool> visited(static_cast<std::size_t>(S), false);

    for (int s0 = 0; s0 < S; ++s0) {
      if (s0 == grid.bottom_strip() || visited[static_cast<std::size_t>(s0)]) continue;
      VertexClass v;
      v.wall = w;
      v.x = grid.wall_x(w);
      // Quarter turns: NE sector BL(w,s) -> across the wall into BR(w-1,s) ->
      // across its bottom edge into TR(w-1,t) -> across the wall into TL(w,t) ->
      // across its top edge into BL(w,pi_w(t)).
      int s = s0;
      do {
        visited[static_cast<std::size_t>(s)] = true;
        const int t = left_inv(s);
        v.levels.push_back(grid.strips()[static_cast<std::size_t>(s)].lo.value());
        v.corners.push_back({w, s, CornerPos::BL});
        v.corners.push_back({w - 1, s, CornerPos::BR});
        v.corners.push_back({w - 1, t, CornerPos::TR});
        v.corners.push_back({w, t, CornerPos::TL});
        s = right(t);
      } while (s != s0);
      PARSLIT_ASSERT(v.corners.size() % 4 == 0 && v.k() >= 1);
      data.classes.push_back(std::move(v));
    }
  }
  return data;
}

// ---------------------------------------------------------------------------

Rational EndData::residue_sum_2pi() const {
  Rational sum = 0;
  for (const auto& e : ends) sum += e.residue_2pi;
  return sum;
}

EndData ends(const GluedGrid& grid) {
  const auto& rightmost = grid.pi(grid.num_columns() - 1);
  if (cycles(rightmost).size() != 1) {
    throw Error(ErrorCode::EndStructure, "rightmost column does not close up into a single end");
  }

  const Permutation& left = grid.pi(0);
  const auto cs = cycles(left);
  const int m = static_cast<int>(cs.size()) - 1;
  EndData data;
  data.ends.resize(cs.size());
  std::vector<bool> assigned(cs.size(), false);

  for (const auto& cyc : cs) {
    // Walk in gluing order rather than canonical order.
    std::vector<int> order;
    int s = cyc.front();
    do {
      order.push_back(s);
      s = left(s);
    } while (s != cyc.front());

    const int label = grid.strips()[static_cast<std::size_t>(order.front())].end_label;
    for (int t : order) {
      if (grid.strips()[static_cast<std::size_t>(t)].end_label != label) {
        throw Error(ErrorCode::EndStructure, "strips of one left end carry different labels");
      }
    }
    const bool dipole = std::find(order.begin(), order.end(), grid.bottom_strip()) != order.end();
    if (dipole != (label == 0)) {
      throw Error(ErrorCode::EndStructure, "label 0 must mark exactly the end with infinite strips");
    }
    if (label > m || assigned[static_cast<std::size_t>(label)]) {
      throw Error(ErrorCode::EndStructure, "left cylinders do not match labels 1..m");
    }
    assigned[static_cast<std::size_t>(label)] = true;

    End e;
    e.label = label;
    e.strips = order;
    if (dipole) {
      e.pole_order = 2;
    } else {
      e.pole_order = 1;
      for (int t : order) e.residue_2pi += grid.height(t).value();
    }
    data.ends[static_cast<std::size_t>(label)] = std::move(e);
  }

  Rational total = 0;
  for (int k = 1; k <= m; ++k) total += data.ends[static_cast<std::size_t>(k)].residue_2pi;
  data.ends[0].residue_2pi = -total;
  return data;
}

// ---------------------------------------------------------------------------

int genus_via_cones(const GluedGrid& grid) {
  const int order = cone_points(grid).total_order();
  const int m = ends(grid).m();
  const int twice = order - m;
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorCode::NonIntegralGenus,
                "sum(k-1) = " + std::to_string(order) + ", m = " + std::to_string(m));
  }
  return twice / 2;
}

EulerData euler_data(const GluedGrid& grid) {
  const int C = grid.num_columns();
  const int S = grid.num_strips();
  const int top = grid.top_strip();
  const int bottom = grid.bottom_strip();

  auto rect = [S](int c, int s) { return static_cast<std::size_t>(c * S + s); };
  auto corner = [&](int c, int s, CornerPos p) { return rect(c, s) * 4 + static_cast<std::size_t>(p); };

  // Truncation replaces every infinite extent by a finite one; the counts
  // below only see the combinatorics of the truncated complex.
  DisjointSets vertices(static_cast<std::size_t>(C * S) * 4);
  long interior_edges = 0;
  for (int c = 0; c + 1 < C; ++c) {
    for (int s = 0; s < S; ++s) {
      vertices.unite(corner(c, s, CornerPos::BR), corner(c + 1, s, CornerPos::BL));
      vertices.unite(corner(c, s, CornerPos::TR), corner(c + 1, s, CornerPos::TL));
      ++interior_edges;
    }
  }
  for (int c = 0; c < C; ++c) {
    for (int s = 0; s < S; ++s) {
      if (s == top) continue;
      const int t = grid.pi(c)(s);
      vertices.unite(corner(c, s, CornerPos::TL), corner(c, t, CornerPos::BL));
      vertices.unite(corner(c, s, CornerPos::TR), corner(c, t, CornerPos::BR));
      ++interior_edges;
    }
  }

  // Boundary edges as pairs of corner endpoints.
  std::vector<std::pair<std::size_t, std::size_t>> boundary;
  for (int s = 0; s < S; ++s) {
    boundary.emplace_back(corner(0, s, CornerPos::BL), corner(0, s, CornerPos::TL));
    boundary.emplace_back(corner(C - 1, s, CornerPos::BR), corner(C - 1, s, CornerPos::TR));
  }
  for (int c = 0; c < C; ++c) {
    boundary.emplace_back(corner(c, bottom, CornerPos::BL), corner(c, bottom, CornerPos::BR));
    boundary.emplace_back(corner(c, top, CornerPos::TL), corner(c, top, CornerPos::TR));
  }

  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < static_cast<std::size_t>(C * S) * 4; ++i) roots.insert(vertices.find(i));

  // Circuits: connected components of the boundary graph on vertex classes.
  std::map<std::size_t, std::size_t> index;
  for (auto r : roots) index.emplace(r, index.size());
  DisjointSets circuits(index.size());
  std::map<std::size_t, int> degree;
  for (auto [p, q] : boundary) {
    const auto u = index.at(vertices.find(p));
    const auto v = index.at(vertices.find(q));
    circuits.unite(u, v);
    degree[u] += 1;
    degree[v] += 1;
  }
  std::set<std::size_t> circuit_roots;
  for (auto [v, d] : degree) {
    PARSLIT_ASSERT(d == 2);
    circuit_roots.insert(circuits.find(v));
  }

  EulerData e;
  e.vertices = static_cast<long>(roots.size());
  e.edges = interior_edges + static_cast<long>(boundary.size());
  e.faces = static_cast<long>(C) * S;
  e.circuits = static_cast<long>(circuit_roots.size());
  e.chi = e.vertices - e.edges + e.faces + e.circuits;

  const long m = static_cast<long>(cycles(grid.pi(0)).size()) - 1;
  if (e.circuits != m + 1) {
    throw Error(ErrorCode::BoundaryCircuitMismatch,
                std::to_string(e.circuits) + " boundary circuits, expected m + 1 = " +
                    std::to_string(m + 1));
  }
  const long twice = 2 - e.chi;
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorCode::NonIntegralGenus, "Euler characteristic " + std::to_string(e.chi));
  }
  e.genus = static_cast<int>(twice / 2);
  return e;
}

int genus_via_euler(const GluedGrid& grid) { return euler_data(grid).genus; }

void check_surface_type(const GluedGrid& grid, const CellLabel& label) {
  const int gc = genus_via_cones(grid);
  const int ge = genus_via_euler(grid);
  PARSLIT_ASSERT(gc == ge);
  const int m = ends(grid).m();
  if (gc != label.g() || m != label.m()) {
    throw Error(ErrorCode::SurfaceTypeMismatch,
                "surface has genus " + std::to_string(gc) + " with " + std::to_string(m + 1) +
                    " punctures, label claims genus " + std::to_string(label.g()) + " with " +
                    std::to_string(label.m() + 1));
  }
}

// ---------------------------------------------------------------------------

ComplexRational period_of_loop(const GluedGrid& grid, const Loop& loop) {
  ComplexRational total;
  if (loop.empty()) return total;

  const int C = grid.num_columns();
  int c = loop.front().column;
  int s = loop.front().strip;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const Crossing& x = loop[k];
    if (x.column != c || x.strip != s) {
      throw Error(ErrorCode::NotClosed, "crossing " + std::to_string(k) + " does not start where the previous one ended");
    }
    if (c < 0 || c >= C || s < 0 || s >= grid.num_strips()) {
      throw Error(ErrorCode::NotClosed, "crossing outside the grid");
    }
    const auto& strips = grid.strips();
    switch (x.dir) {
      case Direction::Right:
        if (c + 1 >= C) throw Error(ErrorCode::NotClosed, "crossing the right end");
        ++c;
        break;
      case Direction::Left:
        if (c == 0) throw Error(ErrorCode::NotClosed, "crossing the left end");
        --c;
        break;
      case Direction::Up: {
        if (s == grid.top_strip()) throw Error(ErrorCode::NotClosed, "crossing the top end");
        const int t = grid.pi(c)(s);
        total.im += strips[static_cast<std::size_t>(s)].hi.value() - strips[static_cast<std::size_t>(t)].lo.value();
        s = t;
        break;
      }
      case Direction::Down: {
        if (s == grid.bottom_strip()) throw Error(ErrorCode::NotClosed, "crossing the bottom end");
        const int t = grid.pi(c).inverse()(s);
        total.im += strips[static_cast<std::size_t>(s)].lo.value() - strips[static_cast<std::size_t>(t)].hi.value();
        s = t;
        break;
      }
    }
  }
  if (c != loop.front().column || s != loop.front().strip) {
    throw Error(ErrorCode::NotClosed, "loop does not return to its starting rectangle");
  }
  return total;
}

Loop cylinder_core_loop(const GluedGrid& grid, const End& end) {
  (void)grid;
  Loop loop;
  for (int s : end.strips) loop.push_back({0, s, Direction::Up});
  return loop;
}

std::vector<Loop> homology_loops(const GluedGrid& grid) {
  const int C = grid.num_columns();
  const int S = grid.num_strips();
  auto id = [S](int c, int s) { return static_cast<std::size_t>(c * S + s); };

  // Undirected adjacencies are keyed by their Right / Up crossing.
  struct Step {
    Crossing crossing;
    int to_c, to_s;
    std::pair<std::size_t, Direction> key;
  };
  auto steps_from = [&](int c, int s) {
    std::vector<Step> out;
    if (c + 1 < C) out.push_back({{c, s, Direction::Right}, c + 1, s, {id(c, s), Direction::Right}});
    if (c > 0) out.push_back({{c, s, Direction::Left}, c - 1, s, {id(c - 1, s), Direction::Right}});
    if (s != grid.top_strip()) {
      const int t = grid.pi(c)(s);
      out.push_back({{c, s, Direction::Up}, c, t, {id(c, s), Direction::Up}});
    }
    if (s != grid.bottom_strip()) {
      const int t = grid.pi(c).inverse()(s);
      out.push_back({{c, s, Direction::Down}, c, t, {id(c, t), Direction::Up}});
    }
    return out;
  };

  std::vector<Loop> path_to(static_cast<std::size_t>(C * S));
  std::vector<bool> seen(static_cast<std::size_t>(C * S), false);
  std::set<std::pair<std::size_t, Direction>> tree;
  std::queue<std::pair<int, int>> queue;
  seen[id(0, 0)] = true;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [c, s] = queue.front();
    queue.pop();
    for (const auto& st : steps_from(c, s)) {
      const auto r = id(st.to_c, st.to_s);
      if (seen[r]) continue;
      seen[r] = true;
      tree.insert(st.key);
      path_to[r] = path_to[id(c, s)];
      path_to[r].push_back(st.crossing);
      queue.push({st.to_c, st.to_s});
    }
  }
  PARSLIT_ASSERT(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));

  auto reversed = [&](const Loop& path) {
    Loop back;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const int c = it->column;
      const int s = it->strip;
      switch (it->dir) {
        case Direction::Right: back.push_back({c + 1, s, Direction::Left}); break;
        case Direction::Left: back.push_back({c - 1, s, Direction::Right}); break;
        case Direction::Up: back.push_back({c, grid.pi(c)(s), Direction::Down}); break;
        case Direction::Down: back.push_back({c, grid.pi(c).inverse()(s), Direction::Up}); break;
      }
    }
    return back;
  };

  std::vector<Loop> loops;
  for (int c = 0; c < C; ++c) {
    for (int s = 0; s < S; ++s) {
      for (const auto& st : steps_from(c, s)) {
        if (st.crossing.dir != Direction::Right && st.crossing.dir != Direction::Up) continue;
        if (tree.count(st.key)) continue;
        Loop loop = path_to[id(c, s)];
        loop.push_back(st.crossing);
        auto back = reversed(path_to[id(st.to_c, st.to_s)]);
        loop.insert(loop.end(), back.begin(), back.end());
        loops.push_back(std::move(loop));
      }
    }
  }
  return loops;
}

}  // namespace parslit
