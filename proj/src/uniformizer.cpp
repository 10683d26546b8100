#include "parslit/uniformizer.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>

#include "parslit/errors.hpp"

namespace parslit {

namespace {

[[noreturn]] void non_generic(Diagnosis d, ErrorCode cause, const std::string& what) {
  throw Error(ErrorCode::NonGeneric, cause, std::string(to_string(d)) + ": " + what);
}

ErrorCode cause_of(Diagnosis d) {
  switch (d) {
    case Diagnosis::SaddleConnection: return ErrorCode::SaddleConnection;
    case Diagnosis::NonSimpleOrColocated: return ErrorCode::NotSimple;
    default: return ErrorCode::NonGeneric;
  }
}

ComplexRational corner_point(const GluedGrid& grid, const Corner& k) {
  const auto& col = grid.columns()[static_cast<std::size_t>(k.column)];
  const auto& st = grid.strips()[static_cast<std::size_t>(k.strip)];
  const bool right = k.pos == CornerPos::BR || k.pos == CornerPos::TR;
  const bool top = k.pos == CornerPos::TR || k.pos == CornerPos::TL;
  return {(right ? col.hi : col.lo).value(), (top ? st.hi : st.lo).value()};
}

}  // namespace

CriticalGraph trace_critical_graph(const GluedGrid& grid) {
  const ConeData cones = cone_points(grid);
  CriticalGraph graph;
  for (const auto& v : cones.classes) {
    if (v.k() > 2) {
      throw Error(ErrorCode::NotSimple, "zero of order " + std::to_string(v.k() - 1) +
                                            " on wall " + std::to_string(v.wall));
    }
    if (v.k() == 2) graph.zeros.push_back(v);
  }

  // k = 1 at (wall c, bottom of strip s) iff pi_c(pi_{c-1}^{-1}(s)) == s.
  auto flat = [&](int wall, int s) {
    return grid.pi(wall)(grid.pi(wall - 1).inverse()(s)) == s;
  };

  for (std::size_t z = 0; z < graph.zeros.size(); ++z) {
    const auto& v = graph.zeros[z];
    for (const auto& corner : v.corners) {
      if (corner.pos != CornerPos::BR) continue;
      // The westward direction sits between BR(c,s) and the TR corner below it.
      Ray ray;
      ray.zero = static_cast<int>(z);
      const int s = corner.strip;
      for (int c = corner.column;; --c) {
        const int lower = grid.pi(c).inverse()(s);
        if (!ray.segments.empty()) PARSLIT_ASSERT(ray.segments.back().lower_strip == lower);
        ray.segments.push_back({c, lower, s});
        if (c == 0) break;
        if (!flat(c, s)) {
          throw Error(ErrorCode::SaddleConnection,
                      "separatrix from the zero on wall " + std::to_string(v.wall) +
                          " runs into a cone point on wall " + std::to_string(c));
        }
      }
      graph.rays.push_back(std::move(ray));
    }
    PARSLIT_ASSERT(graph.rays.size() == 2 * (z + 1));
  }
  return graph;
}

Development develop(const GluedGrid& grid, const CriticalGraph& graph) {
  const int C = grid.num_columns();
  const int S = grid.num_strips();
  const auto& strips = grid.strips();
  auto id = [S](int c, int s) { return static_cast<std::size_t>(c * S + s); };

  // cut[id(c,t)]: the top edge of (c,t) lies on the critical graph.
  std::vector<bool> cut(static_cast<std::size_t>(C * S), false);
  for (const auto& ray : graph.rays) {
    for (const auto& seg : ray.segments) cut[id(seg.column, seg.lower_strip)] = true;
  }

  Development dev;
  dev.num_columns = C;
  dev.num_strips = S;
  dev.offset.assign(static_cast<std::size_t>(C * S), Rational(0));
  std::vector<bool> placed(static_cast<std::size_t>(C * S), false);

  struct Neighbour {
    int c, s;
    Rational shift;
  };
  auto neighbours = [&](int c, int s) {
    std::vector<Neighbour> out;
    if (c > 0) out.push_back({c - 1, s, Rational(0)});
    if (c + 1 < C) out.push_back({c + 1, s, Rational(0)});
    if (s != grid.top_strip() && !cut[id(c, s)]) {
      const int t = grid.pi(c)(s);
      out.push_back({c, t, Rational(strips[static_cast<std::size_t>(s)].hi.value() -
                                    strips[static_cast<std::size_t>(t)].lo.value())});
    }
    if (s != grid.bottom_strip()) {
      const int t = grid.pi(c).inverse()(s);
      if (!cut[id(c, t)]) {
        out.push_back({c, t, Rational(strips[static_cast<std::size_t>(s)].lo.value() -
                                      strips[static_cast<std::size_t>(t)].hi.value())});
      }
    }
    return out;
  };

  const int root_c = C - 1;
  const int root_s = grid.top_strip();
  placed[id(root_c, root_s)] = true;
  std::queue<std::pair<int, int>> queue;
  queue.push({root_c, root_s});
  while (!queue.empty()) {
    auto [c, s] = queue.front();
    queue.pop();
    for (const auto& nb : neighbours(c, s)) {
      const auto r = id(nb.c, nb.s);
      Rational want = dev.offset[id(c, s)] + nb.shift;
      if (placed[r]) {
        if (dev.offset[r] != want) {
          throw Error(ErrorCode::HolonomyMismatch,
                      "rectangle (" + std::to_string(nb.c) + "," + std::to_string(nb.s) +
                          ") develops to two different heights");
        }
        continue;
      }
      placed[r] = true;
      dev.offset[r] = std::move(want);
      queue.push({nb.c, nb.s});
    }
  }
  if (!std::all_of(placed.begin(), placed.end(), [](bool b) { return b; })) {
    throw Error(ErrorCode::HolonomyMismatch, "the complement of the critical graph is disconnected");
  }

  // x never moves, so only rectangles of the same column can overlap.
  for (int c = 0; c < C; ++c) {
    std::vector<std::pair<ExtRational, ExtRational>> spans;
    for (int s = 0; s < S; ++s) {
      const auto& st = strips[static_cast<std::size_t>(s)];
      const ExtRational off(dev.offset_of(c, s));
      if (grid.height(s).is_finite() && grid.height(s).value() == 0) continue;
      spans.emplace_back(st.lo + off, st.hi + off);
    }
    std::sort(spans.begin(), spans.end());
    for (std::size_t k = 1; k < spans.size(); ++k) {
      if (spans[k].first < spans[k - 1].second) {
        throw Error(ErrorCode::OverlapDetected,
                    "developed rectangles overlap in column " + std::to_string(c));
      }
    }
  }

  for (const auto& z : graph.zeros) {
    std::vector<ComplexRational> images;
    for (const auto& k : z.corners) {
      auto p = corner_point(grid, k);
      p.im += dev.offset_of(k.column, k.strip);
      PARSLIT_ASSERT(p.re == z.x);
      images.push_back(std::move(p));
    }
    dev.zero_images.push_back(std::move(images));
  }

  for (const auto& ray : graph.rays) {
    std::optional<Rational> lo_level, up_level;
    for (const auto& seg : ray.segments) {
      Rational lo = strips[static_cast<std::size_t>(seg.lower_strip)].hi.value() +
                    dev.offset_of(seg.column, seg.lower_strip);
      Rational up = strips[static_cast<std::size_t>(seg.upper_strip)].lo.value() +
                    dev.offset_of(seg.column, seg.upper_strip);
      if (lo_level) {
        PARSLIT_ASSERT(*lo_level == lo && *up_level == up);
      } else {
        lo_level = std::move(lo);
        up_level = std::move(up);
      }
    }
    dev.ray_lower_level.push_back(*lo_level);
    dev.ray_upper_level.push_back(*up_level);
  }

  // Around a 4 pi zero the two rays split the neighbourhood into two 2 pi
  // sectors; each sector is one slit whose lower bank is the lower side of one
  // ray and whose upper bank is the upper side of the other ray.
  for (std::size_t z = 0; z < graph.zeros.size(); ++z) {
    const int r1 = static_cast<int>(2 * z);
    const int r2 = r1 + 1;
    auto lvl_lo = [&](int r) -> const Rational& { return dev.ray_lower_level[static_cast<std::size_t>(r)]; };
    auto lvl_up = [&](int r) -> const Rational& { return dev.ray_upper_level[static_cast<std::size_t>(r)]; };
    const Rational& x = graph.zeros[z].x;
    if (lvl_lo(r1) == lvl_up(r2) && lvl_lo(r2) == lvl_up(r1)) {
      dev.slits.push_back({lvl_lo(r1), x, static_cast<int>(z), r1, r2});
      dev.slits.push_back({lvl_lo(r2), x, static_cast<int>(z), r2, r1});
    } else {
      throw Error(ErrorCode::HolonomyMismatch,
                  "banks at the zero on wall " + std::to_string(graph.zeros[z].wall) +
                      " do not pair into slits");
    }
  }
  std::sort(dev.slits.begin(), dev.slits.end(),
            [](const DevelopedSlit& p, const DevelopedSlit& q) { return p.level < q.level; });
  for (std::size_t j = 1; j < dev.slits.size(); ++j) {
    if (dev.slits[j].level == dev.slits[j - 1].level) {
      non_generic(Diagnosis::CoincidentLevels, ErrorCode::NonGeneric,
                  "two slits at level " + format_rational(dev.slits[j].level));
    }
  }
  // Every slit tip is a developed image of its zero.
  for (const auto& sl : dev.slits) {
    const auto& imgs = dev.zero_images[static_cast<std::size_t>(sl.zero)];
    PARSLIT_ASSERT(std::find(imgs.begin(), imgs.end(), ComplexRational{sl.tip_x, sl.level}) != imgs.end());
  }
  return dev;
}

GluedGrid merge_wall(const GluedGrid& grid, int c) {
  auto cols = grid.columns();
  if (c < 0 || c + 1 >= static_cast<int>(cols.size())) {
    throw Error(ErrorCode::InvalidGrid, "no wall after column " + std::to_string(c));
  }
  auto& left = cols[static_cast<std::size_t>(c)];
  const auto& right = cols[static_cast<std::size_t>(c + 1)];
  if (left.pi != right.pi) throw Error(ErrorCode::InvalidGrid, "wall is not fake");
  left.hi = right.hi;
  cols.erase(cols.begin() + c + 1);
  return GluedGrid(std::move(cols), grid.strips());
}

GluedGrid merge_fake_walls(const GluedGrid& grid) {
  std::vector<Column> merged;
  for (const auto& col : grid.columns()) {
    if (!merged.empty() && merged.back().pi == col.pi) {
      merged.back().hi = col.hi;
    } else {
      merged.push_back(col);
    }
  }
  return GluedGrid(std::move(merged), grid.strips());
}

ParallelSlitDomain uniformize(const GluedGrid& input) {
  const GluedGrid grid = merge_fake_walls(input);
  const GenericityReport report = is_generic(grid);
  if (!report.generic) non_generic(report.diagnosis, cause_of(report.diagnosis), report.detail);

  const CriticalGraph graph = trace_critical_graph(grid);
  const Development dev = develop(grid, graph);
  const int h = static_cast<int>(graph.zeros.size());

  // a: critical values, descending; zero_rank[z] is the 1-based k with a_k = x(z).
  std::vector<std::pair<Rational, int>> by_x;
  for (int z = 0; z < h; ++z) by_x.emplace_back(graph.zeros[static_cast<std::size_t>(z)].x, z);
  std::sort(by_x.begin(), by_x.end(), [](const auto& p, const auto& q) { return p.first > q.first; });
  std::vector<Rational> a;
  std::vector<int> zero_rank(static_cast<std::size_t>(h));
  for (int k = 0; k < h; ++k) {
    a.push_back(by_x[static_cast<std::size_t>(k)].first);
    zero_rank[static_cast<std::size_t>(by_x[static_cast<std::size_t>(k)].second)] = k + 1;
  }

  // b: slit levels ascending (already sorted, pairwise distinct).
  PARSLIT_ASSERT(static_cast<int>(dev.slits.size()) == 2 * h);
  std::vector<Rational> b;
  std::map<Rational, int> level_index;  // level -> 1-based j
  for (const auto& sl : dev.slits) {
    b.push_back(sl.level);
    level_index.emplace(sl.level, static_cast<int>(b.size()));
  }
  std::vector<int> per_tip(static_cast<std::size_t>(h + 1), 0);
  for (const auto& sl : dev.slits) ++per_tip[static_cast<std::size_t>(zero_rank[static_cast<std::size_t>(sl.zero)])];
  for (int k = 1; k <= h; ++k) PARSLIT_ASSERT(per_tip[static_cast<std::size_t>(k)] == 2);

  // The lower bank of slit j is glued to whatever lies on the far side of the
  // ray carrying that bank, i.e. the upper bank of the slit at that ray's
  // upper-side level.
  const int n = 2 * h + 1;
  std::vector<int> glued_to(static_cast<std::size_t>(n), 0);
  std::vector<int> rank_of_slit(static_cast<std::size_t>(n), 0);
  for (const auto& sl : dev.slits) {
    const int j = level_index.at(sl.level);
    const auto up = dev.ray_upper_level[static_cast<std::size_t>(sl.lower_bank_ray)];
    glued_to[static_cast<std::size_t>(j)] = level_index.at(up);
    rank_of_slit[static_cast<std::size_t>(j)] = zero_rank[static_cast<std::size_t>(sl.zero)];
  }

  // Column i spans [a_{i+1}, a_i]; slit j cuts it iff its tip is at a_k with k <= i.
  CellCandidate cand;
  cand.n = 1;
  for (int i = 0; i <= h; ++i) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int j = 1; j <= 2 * h; ++j) {
      const bool cut = rank_of_slit[static_cast<std::size_t>(j)] <= i;
      sigma[static_cast<std::size_t>(j - 1)] = cut ? glued_to[static_cast<std::size_t>(j)] : j;
    }
    sigma[static_cast<std::size_t>(2 * h)] = 0;
    cand.sigmas.push_back(std::move(sigma));
  }

  // nu: read the puncture label of the surface region left of every slit tip.
  const Permutation sigma_h(cand.sigmas.back());
  const auto cs = cycles(sigma_h);
  const int m = static_cast<int>(cs.size()) - 1;
  cand.nu.assign(static_cast<std::size_t>(m + 1), {});
  std::vector<bool> have(static_cast<std::size_t>(m + 1), false);
  for (const auto& cyc : cs) {
    int label = 0;
    if (cyc.front() != 0) {
      const int j = cyc.front();  // normal-form strip between b_j and b_{j+1}
      PARSLIT_ASSERT(j >= 1 && j < 2 * h);
      const Rational mid = (b[static_cast<std::size_t>(j - 1)] + b[static_cast<std::size_t>(j)]) / 2;
      int found = -1;
      for (int s = 0; s < grid.num_strips(); ++s) {
        const auto& st = grid.strips()[static_cast<std::size_t>(s)];
        const ExtRational off(dev.offset_of(0, s));
        if (st.lo + off <= ExtRational(mid) && ExtRational(mid) < st.hi + off) {
          found = s;
          break;
        }
      }
      PARSLIT_ASSERT(found >= 0);
      label = grid.strips()[static_cast<std::size_t>(found)].end_label;
    }
    if (label > m || have[static_cast<std::size_t>(label)]) {
      throw Error(ErrorCode::EndStructure, "end labels do not match the left cylinders");
    }
    have[static_cast<std::size_t>(label)] = true;
    cand.nu[static_cast<std::size_t>(label)] = cyc;
  }

  if ((h - m) % 2 != 0 || h < m) {
    throw Error(ErrorCode::NonIntegralGenus, "h = " + std::to_string(h) + ", m = " + std::to_string(m));
  }
  cand.g = (h - m) / 2;
  cand.m = m;
  PARSLIT_ASSERT(cand.g == genus_via_euler(grid));
  PARSLIT_ASSERT(m == ends(grid).m());

  CellLabel label = validate_cell_label(cand);
  return make_domain(std::move(label), normalize(std::move(a), std::move(b)));
}

PeriodMatrix periods(const Development& dev) {
  // Zeros ranked by decreasing tip x.
  std::vector<int> zero_ids;
  for (const auto& sl : dev.slits) {
    if (std::find(zero_ids.begin(), zero_ids.end(), sl.zero) == zero_ids.end()) zero_ids.push_back(sl.zero);
  }
  auto tip_x = [&](int z) {
    for (const auto& sl : dev.slits) {
      if (sl.zero == z) return sl.tip_x;
    }
    throw Error(ErrorCode::InternalAssertion, "zero without slits");
  };
  std::sort(zero_ids.begin(), zero_ids.end(), [&](int p, int q) { return tip_x(p) > tip_x(q); });

  std::vector<ComplexRational> upper, lower;
  for (int z : zero_ids) {
    std::vector<Rational> levels;
    for (const auto& sl : dev.slits) {
      if (sl.zero == z) levels.push_back(sl.level);
    }
    PARSLIT_ASSERT(levels.size() == 2);
    std::sort(levels.begin(), levels.end());
    lower.push_back({tip_x(z), levels[0]});
    upper.push_back({tip_x(z), levels[1]});
  }

  PeriodMatrix pm;
  const std::size_t h = zero_ids.size();
  pm.z.assign(h, std::vector<ComplexRational>(h));
  for (std::size_t k = 0; k < h; ++k) {
    for (std::size_t l = 0; l < h; ++l) {
      pm.z[k][l] = (k == l) ? upper[k] - lower[k] : upper[l] - upper[k];
    }
  }
  return pm;
}

}  // namespace parslit
