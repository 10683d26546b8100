// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact;
// the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "parslit/census.hpp"
#include "parslit/errors.hpp"
#include "parslit/io.hpp"
#include "parslit/scramble.hpp"
#include "parslit/svg.hpp"
#include "parslit/uniformizer.hpp"
#include "support.hpp"

using namespace parslit;
using parslit::testing::random_domain;
using parslit::testing::raw_grid;
using parslit::testing::stepped;

namespace {

constexpr double kLimitDimension = 1.0;
constexpr double kLimitSurfaceType = 60.0;
constexpr double kLimitRoundTrip = 60.0;
constexpr double kLimitInvariance = 120.0;
constexpr double kLimitCensus = 10.0;
constexpr int kRandomPerHeight = 100;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Enumerated {
  int g, m;
  CensusReport report;
};

// Brute force where it runs (h <= 2), stepped up to h = 4. Built on first
// use, so criterion 2 carries the enumeration time.
const std::vector<Enumerated>& enumerated() {
  static const std::vector<Enumerated> all = [] {
    std::vector<Enumerated> out;
    for (int h = 1; h <= 4; ++h) {
      for (int g = 0; 2 * g <= h; ++g) {
        const int m = h - 2 * g;
        if (h <= 2) out.push_back({g, m, enumerate_cells(g, m, CensusMethod::Brute)});
        out.push_back({g, m, enumerate_cells(g, m, CensusMethod::Stepped)});
      }
    }
    return out;
  }();
  return all;
}

std::string type_name(int g, int m) { return "(g,m)=(" + std::to_string(g) + "," + std::to_string(m) + ")"; }

void check_ends(Outcome& o, const GluedGrid& grid, int m, const std::string& where) {
  const EndData ed = ends(grid);
  o.require(ed.m() == m, where + ": wrong puncture count");
  o.require(ed.ends.at(0).pole_order == 2, where + ": dipole end is not a double pole");
  for (int k = 1; k <= ed.m(); ++k) {
    o.require(ed.ends[static_cast<std::size_t>(k)].pole_order == 1, where + ": log end is not a simple pole");
    o.require(ed.ends[static_cast<std::size_t>(k)].residue_2pi > 0, where + ": non-positive residue");
  }
  o.require(ed.residue_sum_2pi() == 0, where + ": residues do not sum to 0");
}

void check_periods(Outcome& o, const GluedGrid& grid, const std::string& where) {
  for (const auto& loop : homology_loops(grid)) {
    o.require(period_of_loop(grid, loop).re == 0, where + ": homology loop with real period");
  }
  for (const auto& e : ends(grid).ends) {
    if (e.label == 0) continue;
    const ComplexRational p = period_of_loop(grid, cylinder_core_loop(grid, e));
    o.require(p.re == 0 && p.im == e.residue_2pi, where + ": cylinder period is not i times its height");
  }
  const GluedGrid merged = merge_fake_walls(grid);
  const PeriodMatrix pm = periods(develop(merged, trace_critical_graph(merged)));
  for (std::size_t k = 0; k < pm.size(); ++k) {
    o.require(pm.at(k, k).re == 0 && pm.at(k, k).im != 0, where + ": z_kk not purely imaginary and nonzero");
  }
}

Outcome dimension() {
  Outcome o;
  for (int h = 1; h <= 6; ++h) {
    for (int g = 0; 2 * g <= h; ++g) {
      const int m = h - 2 * g;
      const int d = cell_dimension(standard_label(g, m));
      o.require(d == 3 * h - 2 && d == 6 * g - 6 + 5 + 3 * m - 1, type_name(g, m));
    }
  }
  return o;
}

Outcome surface_type() {
  Outcome o;
  std::size_t cells = 0;
  for (const auto& en : enumerated()) {
    for (const auto& e : en.report.cells) {
      const GluedGrid grid = glue(sample_domain(e.label));
      o.require(genus_via_cones(grid) == en.g, type_name(en.g, en.m) + ": genus from cone angles");
      o.require(genus_via_euler(grid) == en.g, type_name(en.g, en.m) + ": genus from Euler characteristic");
      o.require(ends(grid).m() + 1 == en.m + 1, type_name(en.g, en.m) + ": puncture count");
      ++cells;
    }
  }
  o.require(cells > 0, "no cells enumerated");
  o.detail = o.ok ? std::to_string(cells) + " cells" : o.detail;
  return o;
}

Outcome zero_count() {
  Outcome o;
  for (const auto& en : enumerated()) {
    const int h = 2 * en.g + en.m;
    for (const auto& e : en.report.cells) {
      const GluedGrid grid = glue(sample_domain(e.label));
      const ConeData cd = cone_points(grid);
      const auto zeros = cd.zeros();
      o.require(cd.total_order() == h, type_name(en.g, en.m) + ": total order");
      o.require(zeros.size() == static_cast<std::size_t>(h), type_name(en.g, en.m) + ": zero count");
      std::set<int> walls;
      for (const auto& z : zeros) {
        o.require(z.k() == 2, type_name(en.g, en.m) + ": zero not simple");
        walls.insert(z.wall);
      }
      o.require(walls.size() == static_cast<std::size_t>(h) && grid.num_walls() == h,
                type_name(en.g, en.m) + ": not one zero per wall");
    }
  }
  return o;
}

Outcome residues() {
  Outcome o;
  std::size_t grids = 0;
  for (const auto& en : enumerated()) {
    for (const auto& e : en.report.cells) {
      check_ends(o, glue(sample_domain(e.label)), en.m, type_name(en.g, en.m));
      ++grids;
    }
  }
  std::mt19937_64 rng(404);
  for (int h = 1; h <= 4; ++h) {
    for (int t = 0; t < 25; ++t) {
      const ParallelSlitDomain x = random_domain(rng, h);
      check_ends(o, glue(x), x.label.m(), "random h=" + std::to_string(h));
      check_ends(o, scramble(glue(x), rng()), x.label.m(), "scrambled h=" + std::to_string(h));
      grids += 2;
    }
  }
  if (o.ok) o.detail = std::to_string(grids) + " grids";
  return o;
}

Outcome periods_imaginary() {
  Outcome o;
  std::size_t grids = 0;
  for (const auto& en : enumerated()) {
    if (2 * en.g + en.m > 3) continue;
    for (const auto& e : en.report.cells) {
      check_periods(o, glue(sample_domain(e.label)), type_name(en.g, en.m));
      ++grids;
    }
  }
  std::mt19937_64 rng(505);
  for (int h = 1; h <= 4; ++h) {
    for (int t = 0; t < 25; ++t) {
      const ParallelSlitDomain x = random_domain(rng, h);
      check_periods(o, glue(x), "random h=" + std::to_string(h));
      check_periods(o, scramble(glue(x), rng()), "scrambled h=" + std::to_string(h));
      grids += 2;
    }
  }
  if (o.ok) o.detail = std::to_string(grids) + " grids";
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::mt19937_64 rng(606);
  for (int h = 1; h <= 4; ++h) {
    for (int t = 0; t < kRandomPerHeight; ++t) {
      const ParallelSlitDomain x = random_domain(rng, h);
      o.require(uniformize(glue(x)) == x, "round trip failed at h=" + std::to_string(h));
    }
  }
  if (o.ok) o.detail = std::to_string(4 * kRandomPerHeight) + " domains";
  return o;
}

Outcome invariance() {
  Outcome o;
  std::mt19937_64 rng(707);
  std::size_t walls = 0, splits = 0;
  for (int h = 1; h <= 4; ++h) {
    for (int t = 0; t < kRandomPerHeight; ++t) {
      const ParallelSlitDomain x = random_domain(rng, h);
      const GluedGrid g = glue(x);
      const GluedGrid s = scramble(g, rng());
      walls += static_cast<std::size_t>(s.num_columns() - g.num_columns());
      splits += static_cast<std::size_t>(s.num_strips() - g.num_strips());
      o.require(uniformize(s) == x, "scrambled round trip failed at h=" + std::to_string(h));
    }
  }
  o.require(walls >= 4 * kRandomPerHeight && splits >= 4 * kRandomPerHeight, "scrambles too weak");
  if (o.ok) {
    o.detail = std::to_string(4 * kRandomPerHeight) + " pairs, " + std::to_string(walls) + " fake walls, " +
               std::to_string(splits) + " strip splits";
  }
  return o;
}

// Runs f and reports the error code it throws, or nothing if it returns.
std::optional<Error> thrown(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

Outcome non_generic() {
  Outcome o;
  auto expect = [&](const GluedGrid& g, ErrorCode cause, const std::string& what) {
    const auto e = thrown([&] { (void)uniformize(g); });
    o.require(e.has_value(), what + ": uniformize returned a domain");
    if (e) {
      o.require(e->code() == ErrorCode::NonGeneric, what + ": got " + e->what());
      o.require(e->cause() == cause, what + ": wrong cause, got " + e->what());
    }
  };

  // Coincident b-levels, from the golden file and by collapsing random strips.
  expect(read_grid(parse_document(read_text_file(std::string(PARSLIT_GOLDEN_DIR) + "/degenerate.json"))),
         ErrorCode::NonGeneric, "degenerate.json");
  std::mt19937_64 rng(808);
  for (int h = 1; h <= 4; ++h) {
    for (int t = 0; t < 10; ++t) {
      const GluedGrid g = glue(random_domain(rng, h));
      const int s = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * h - 1));
      const GluedGrid bad = collapse_strip(g, s);
      o.require(is_generic(bad).diagnosis == Diagnosis::CoincidentLevels, "collapsed strip not diagnosed");
      expect(bad, ErrorCode::NonGeneric, "collapsed strip");
      expect(scramble(bad, rng()), ErrorCode::NonGeneric, "scrambled collapsed strip");
    }
  }

  // Saddle connections: overlapping transpositions, and every degenerate
  // example the censuses found.
  expect(raw_grid(stepped(2, {{1, 2}, {2, 3}})), ErrorCode::SaddleConnection, "tau_1=(1 2), tau_2=(2 3)");
  const auto trace_error = thrown([] { (void)trace_critical_graph(raw_grid(stepped(2, {{1, 2}, {2, 3}}))); });
  o.require(trace_error && trace_error->code() == ErrorCode::SaddleConnection, "tracer missed the saddle connection");
  std::size_t examples = 0;
  for (const auto& en : enumerated()) {
    for (const auto& d : en.report.degenerate_examples) {
      const ErrorCode cause =
          d.diagnosis == Diagnosis::SaddleConnection ? ErrorCode::SaddleConnection : ErrorCode::NotSimple;
      expect(raw_grid(d.sigmas), cause, "census degenerate example");
      ++examples;
    }
  }

  // Equal adjacent permutations collapsing a wall: a 3-cycle step followed by
  // a repeated column leaves one double zero.
  const auto n = std::size_t{5};
  const Permutation s1 = Permutation({0, 2, 3, 1, 4}) * Permutation::shift(n);
  expect(raw_grid({Permutation::shift(n), s1, s1}), ErrorCode::NotSimple, "collapsed wall");
  // All walls collapsed: a valid (1,0) label that glues to a sphere.
  CellCandidate c;
  c.g = 1;
  c.m = 0;
  for (int i = 0; i < 3; ++i) c.sigmas.push_back(Permutation::shift(n).one_line());
  c.nu = {{0, 1, 2, 3, 4}};
  const CellLabel flat = validate_cell_label(c);
  const GluedGrid sphere = glue(sample_domain(flat));
  const auto st = thrown([&] { check_surface_type(sphere, flat); });
  o.require(st && st->code() == ErrorCode::SurfaceTypeMismatch, "wall-free label not flagged");
  expect(sphere, ErrorCode::NonGeneric, "wall-free label");

  if (o.ok) o.detail = std::to_string(examples) + " census examples plus constructed cases";
  return o;
}

std::set<CellLabel> labels_of(const CensusReport& r) {
  std::set<CellLabel> out;
  for (const auto& e : r.cells) out.insert(e.label);
  return out;
}

Outcome census() {
  Outcome o;
  const CensusReport one = enumerate_cells(0, 1, CensusMethod::Brute);
  o.require(one.label_count == 1 && one.cells.size() == 1, "(0,1) does not have exactly one cell");
  for (int h = 1; h <= 2; ++h) {
    for (int g = 0; 2 * g <= h; ++g) {
      const int m = h - 2 * g;
      const CensusReport b = enumerate_cells(g, m, CensusMethod::Brute);
      const CensusReport s = enumerate_cells(g, m, CensusMethod::Stepped);
      const CensusReport b2 = enumerate_cells(g, m, CensusMethod::Brute);
      o.require(labels_of(b) == labels_of(s), type_name(g, m) + ": brute and stepped differ");
      o.require(write_document(to_document(b)) == write_document(to_document(b2)), type_name(g, m) + ": not deterministic");
      if (h == 2) o.require(b.candidates == 576, "h=2 brute space is not 576");
    }
  }
  return o;
}

Outcome serialization() {
  Outcome o;
  const std::string dir = PARSLIT_GOLDEN_DIR;
  auto text_of = [&](const char* name) { return read_text_file(dir + "/" + name); };

  const std::string cell_text = text_of("h1_cell.json");
  const Document cell_doc = parse_document(cell_text);
  const CellLabel cell = read_cell(cell_doc);
  o.require(write_document(to_document(cell, cell_doc.notes)) == cell_text, "h1_cell.json round trip");
  o.require(cell == standard_label(0, 1), "h1_cell.json is not the worked example");

  const std::string dom_text = text_of("h1_domain.json");
  const Document dom_doc = parse_document(dom_text);
  const ParallelSlitDomain x = read_domain(dom_doc);
  o.require(write_document(to_document(x, dom_doc.notes)) == dom_text, "h1_domain.json round trip");

  for (const char* name : {"h1_grid.json", "degenerate.json"}) {
    const std::string text = text_of(name);
    const Document d = parse_document(text);
    o.require(write_document(to_document(read_grid(d), d.notes)) == text, std::string(name) + " round trip");
  }
  const GluedGrid g = read_grid(parse_document(text_of("h1_grid.json")));
  o.require(g == glue(x) && uniformize(g) == x, "h1 golden files disagree");

  std::mt19937_64 rng(909);
  for (int h = 1; h <= 4; ++h) {
    for (int t = 0; t < 10; ++t) {
      const ParallelSlitDomain y = random_domain(rng, h);
      const std::string dt = write_document(to_document(y));
      o.require(read_domain(parse_document(dt)) == y, "domain document round trip");
      const GluedGrid sg = scramble(glue(y), rng());
      const std::string gt = write_document(to_document(sg));
      o.require(read_grid(parse_document(gt)) == sg, "grid document round trip");
      o.require(render_svg(y) == render_svg(y), "domain SVG not deterministic");
      o.require(render_svg(sg) == render_svg(sg), "grid SVG not deterministic");
    }
  }
  const std::string svg = render_svg(x, parse_view("-2:1:-1:2"));
  o.require(svg == render_svg(x, parse_view("-2:1:-1:2")), "h1 SVG not deterministic");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double limit_s;  // 0: no time limit
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "dimension consistency", dimension, kLimitDimension},
      {2, "surface type", surface_type, kLimitSurfaceType},
      {3, "zero count", zero_count, 0},
      {4, "residues", residues, 0},
      {5, "periods", periods_imaginary, 0},
      {6, "round trip", round_trip, kLimitRoundTrip},
      {7, "presentation invariance", invariance, kLimitInvariance},
      {8, "non-genericity detection", non_generic, 0},
      {9, "census agreement", census, kLimitCensus},
      {10, "serialization and rendering", serialization, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.require(false, "took longer than the limit");
      if (o.detail.empty()) o.detail = "took longer than the limit";
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d %-30s %8.3f s", o.ok ? "PASS" : "FAIL", c.id, c.name, secs);
    if (c.limit_s > 0) std::printf(" (limit %.0f s)", c.limit_s);
    if (!o.detail.empty()) std::printf("  %s", o.detail.c_str());
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
