#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "parslit/census.hpp"
#include "parslit/errors.hpp"
#include "parslit/flat_surface.hpp"
#include "parslit/io.hpp"
#include "parslit/scramble.hpp"
#include "parslit/svg.hpp"
#include "parslit/uniformizer.hpp"

namespace {

using namespace parslit;

enum Exit { kOk = 0, kInvalid = 1, kNonGeneric = 2, kInternal = 3 };

Document load(const std::string& path) { return parse_document(read_text_file(path)); }

// Cells stand for their sample domain, domains for their glued grid.
ParallelSlitDomain as_domain(const Document& doc) {
  if (doc.kind == DocKind::Cell) return sample_domain(read_cell(doc));
  return read_domain(doc);
}

GluedGrid as_grid(const Document& doc) {
  if (doc.kind == DocKind::Grid) return read_grid(doc);
  return glue(as_domain(doc));
}

void emit(const Document& doc) { std::cout << write_document(doc); }

int cmd_validate(const std::string& file) {
  const Document doc = load(file);
  switch (doc.kind) {
    case DocKind::Cell: (void)read_cell(doc); break;
    case DocKind::Domain: (void)read_domain(doc); break;
    case DocKind::Grid: (void)read_grid(doc); break;
    case DocKind::Report: (void)read_report(doc); break;
    case DocKind::Periods: (void)read_periods(doc); break;
  }
  std::cout << "valid " << to_string(doc.kind) << "\n";
  return kOk;
}

int cmd_invariants(const std::string& file) {
  const GluedGrid grid = as_grid(load(file));
  const EulerData eu = euler_data(grid);
  const EndData ed = ends(grid);
  Json out;
  out["genus_cones"] = genus_via_cones(grid);
  out["genus_euler"] = eu.genus;
  out["euler"] = {{"vertices", eu.vertices}, {"edges", eu.edges},       {"faces", eu.faces},
                  {"circuits", eu.circuits}, {"chi", eu.chi}};
  out["punctures"] = ed.m() + 1;
  Json ends_json = Json::array();
  for (const auto& e : ed.ends) {
    ends_json.push_back({{"label", e.label},
                         {"pole_order", e.pole_order},
                         {"residue_2pi", format_rational(e.residue_2pi)},
                         {"strips", e.strips}});
  }
  out["ends"] = ends_json;
  out["residue_sum_2pi"] = format_rational(ed.residue_sum_2pi());
  Json zeros = Json::array();
  for (const auto& z : cone_points(grid).zeros()) {
    zeros.push_back({{"x", format_rational(z.x)}, {"order", z.k() - 1}, {"cone_angle_2pi", z.k()}});
  }
  out["zeros"] = zeros;
  const GenericityReport rep = is_generic(grid);
  out["generic"] = rep.generic;
  out["diagnosis"] = to_string(rep.diagnosis);
  if (!rep.detail.empty()) out["detail"] = rep.detail;
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_roundtrip(const std::string& file, const std::optional<std::uint64_t>& seed) {
  const ParallelSlitDomain x = as_domain(load(file));
  GluedGrid grid = glue(x);
  if (seed) grid = scramble(grid, *seed);
  const ParallelSlitDomain y = uniformize(grid);
  if (y == x) {
    std::cout << "roundtrip ok\n";
    return kOk;
  }
  std::cerr << "roundtrip mismatch; uniformized domain:\n" << write_document(to_document(y));
  return kInternal;
}

int run(int argc, char** argv) {
  CLI::App app{"parslit: parallel slit domains, glued flat surfaces and their uniformization"};
  app.require_subcommand(1);

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", file, "input document")->required(); };

  auto* validate = app.add_subcommand("validate", "check a document against all invariants");
  add_file(validate);
  auto* glue_cmd = app.add_subcommand("glue", "glue a domain into its grid");
  add_file(glue_cmd);
  auto* inv = app.add_subcommand("invariants", "genus, punctures, residues, zeros and genericity");
  add_file(inv);
  auto* uni = app.add_subcommand("uniformize", "canonical slit domain of a generic grid");
  add_file(uni);
  auto* per = app.add_subcommand("periods", "period numbers of a generic grid or domain");
  add_file(per);

  std::uint64_t seed = 0;
  auto* scr = app.add_subcommand("scramble", "another presentation of the same surface");
  add_file(scr);
  scr->add_option("--seed", seed, "scramble seed")->required();

  std::optional<std::uint64_t> rt_seed;
  auto* rt = app.add_subcommand("roundtrip", "exit 0 iff uniformize(scramble(glue(x))) == x");
  add_file(rt);
  rt->add_option("--seed", rt_seed, "scramble seed; without it the glued grid is used as is");

  int g = 0;
  int m = 0;
  std::string method = "stepped";
  std::uint64_t bound = CensusOptions{}.bound;
  auto* census = app.add_subcommand("census", "enumerate the top cells of a given type");
  census->add_option("--g", g, "genus")->required();
  census->add_option("--m", m, "number of log punctures")->required();
  census->add_option("--method", method, "brute or stepped")->check(CLI::IsMember({"brute", "stepped"}));
  census->add_option("--bound", bound, "largest candidate space to search");

  std::string out_path;
  std::string view_text;
  auto* render = app.add_subcommand("render", "draw a domain or a developed grid as SVG");
  add_file(render);
  render->add_option("--out", out_path, "SVG file to write")->required();
  render->add_option("--view", view_text, "XMIN:XMAX:YMIN:YMAX");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  if (validate->parsed()) return cmd_validate(file);
  if (glue_cmd->parsed()) {
    emit(to_document(glue(as_domain(load(file))), {"glued"}));
    return kOk;
  }
  if (inv->parsed()) return cmd_invariants(file);
  if (uni->parsed()) {
    emit(to_document(uniformize(as_grid(load(file))), {"uniformized"}));
    return kOk;
  }
  if (per->parsed()) {
    const GluedGrid grid = merge_fake_walls(as_grid(load(file)));
    const GenericityReport rep = is_generic(grid);
    if (!rep.generic) throw Error(ErrorCode::NonGeneric, std::string(to_string(rep.diagnosis)) + ": " + rep.detail);
    emit(to_document(periods(develop(grid, trace_critical_graph(grid)))));
    return kOk;
  }
  if (scr->parsed()) {
    emit(to_document(scramble(as_grid(load(file)), seed), {"scrambled with seed " + std::to_string(seed)}));
    return kOk;
  }
  if (rt->parsed()) return cmd_roundtrip(file, rt_seed);
  if (census->parsed()) {
    CensusOptions opts;
    opts.bound = bound;
    emit(to_document(enumerate_cells(g, m, parse_census_method(method), opts)));
    return kOk;
  }
  if (render->parsed()) {
    std::optional<View> view;
    if (!view_text.empty()) view = parse_view(view_text);
    const Document doc = load(file);
    const std::string svg =
        doc.kind == DocKind::Grid ? render_svg(read_grid(doc), view) : render_svg(as_domain(doc), view);
    write_text_file(out_path, svg);
    return kOk;
  }
  return kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parslit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.error_class()) {
      case parslit::ErrorClass::InvalidInput: return kInvalid;
      case parslit::ErrorClass::NonGeneric: return kNonGeneric;
      case parslit::ErrorClass::Internal: return kInternal;
    }
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
