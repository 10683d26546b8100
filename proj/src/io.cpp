#include "parslit/io.hpp"

#include <fstream>
#include <sstream>

#include "parslit/errors.hpp"

namespace parslit {

std::string_view to_string(DocKind kind) {
  switch (kind) {
    case DocKind::Cell: return "cell";
    case DocKind::Domain: return "domain";
    case DocKind::Grid: return "grid";
    case DocKind::Report: return "report";
    case DocKind::Periods: return "periods";
  }
  return "unknown";
}

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

// A JSON value together with its JSON-pointer location, for error messages.
class Node {
 public:
  Node(const Json& value, std::string path) : v_(value), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  const Json& raw() const { return v_; }

  Node operator[](const char* key) const {
    if (!v_.is_object()) schema_error(path_, "expected an object");
    auto it = v_.find(key);
    if (it == v_.end()) schema_error(path_, std::string("missing key \"") + key + "\"");
    return {*it, path_ + "/" + key};
  }

  bool has(const char* key) const { return v_.is_object() && v_.contains(key); }

  Node operator[](std::size_t i) const { return {array().at(i), path_ + "/" + std::to_string(i)}; }

  std::size_t size() const { return array().size(); }

  const Json& array() const {
    if (!v_.is_array()) schema_error(path_, "expected an array");
    return v_;
  }

  long long as_int() const {
    if (!v_.is_number_integer()) schema_error(path_, "expected an integer");
    return v_.get<long long>();
  }

  int as_small_int() const {
    const long long x = as_int();
    if (x < -1'000'000 || x > 1'000'000) schema_error(path_, "integer out of range");
    return static_cast<int>(x);
  }

  std::string as_string() const {
    if (!v_.is_string()) schema_error(path_, "expected a string");
    return v_.get<std::string>();
  }

  Rational as_rational() const {
    try {
      return parse_rational(as_string());
    } catch (const Error& e) {
      schema_error(path_, e.what());
    }
  }

  ExtRational as_ext_rational() const {
    try {
      return parse_ext_rational(as_string());
    } catch (const Error& e) {
      schema_error(path_, e.what());
    }
  }

  std::vector<int> as_int_list() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].as_small_int());
    return out;
  }

  std::vector<Rational> as_rational_list() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].as_rational());
    return out;
  }

 private:
  const Json& v_;
  std::string path_;
};

template <typename F>
auto validated(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvariantViolation) throw;
    throw Error(ErrorCode::InvariantViolation, e.code(), e.what());
  }
}

void expect_kind(const Document& doc, DocKind kind) {
  if (doc.kind != kind) {
    throw Error(ErrorCode::ParseError, "at /kind: expected a " + std::string(to_string(kind)) +
                                           " document, got " + std::string(to_string(doc.kind)));
  }
}

Json rational_list(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(format_rational(x));
  return out;
}

Json cell_payload(const CellLabel& label) {
  Json sig = Json::array();
  for (const auto& s : label.sigmas()) sig.push_back(s.one_line());
  Json nu = Json::array();
  for (const auto& c : label.nu()) nu.push_back(c);
  return Json{{"g", label.g()}, {"m", label.m()}, {"n", label.n()}, {"sigma", sig}, {"nu", nu}};
}

CellLabel cell_from(const Node& p) {
  CellCandidate cand;
  cand.g = p["g"].as_small_int();
  cand.m = p["m"].as_small_int();
  cand.n = p.has("n") ? p["n"].as_small_int() : 1;
  const Node sig = p["sigma"];
  for (std::size_t i = 0; i < sig.size(); ++i) cand.sigmas.push_back(sig[i].as_int_list());
  const Node nu = p["nu"];
  for (std::size_t i = 0; i < nu.size(); ++i) cand.nu.push_back(nu[i].as_int_list());
  return validated([&] { return validate_cell_label(cand); });
}

Json domain_payload(const ParallelSlitDomain& x) {
  return Json{{"cell", cell_payload(x.label)}, {"a", rational_list(x.coords.a())}, {"b", rational_list(x.coords.b())}};
}

ParallelSlitDomain domain_from(const Node& p) {
  CellLabel label = cell_from(p["cell"]);
  auto a = p["a"].as_rational_list();
  auto b = p["b"].as_rational_list();
  return validated([&] {
    // Stored coordinates must already be the normalized representative.
    SlitCoordinates c = normalize(a, b);
    if (c.a() != a || c.b() != b) {
      throw Error(ErrorCode::Malformed, "coordinates are not normalized (a_1 = b_1 = 0)");
    }
    return make_domain(std::move(label), std::move(c));
  });
}

Json diagnosis_json(Diagnosis d) { return std::string(to_string(d)); }

Diagnosis diagnosis_from(const Node& n) {
  const std::string s = n.as_string();
  for (Diagnosis d : {Diagnosis::Generic, Diagnosis::CoincidentLevels, Diagnosis::NoZeros,
                      Diagnosis::NonSimpleOrColocated, Diagnosis::SaddleConnection}) {
    if (s == to_string(d)) return d;
  }
  schema_error(n.path(), "unknown diagnosis \"" + s + "\"");
}

Json complex_json(const ComplexRational& z) {
  return Json{{"re", format_rational(z.re)}, {"im", format_rational(z.im)}};
}

}  // namespace

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "at byte " + std::to_string(e.byte) + ": invalid JSON");
  }
  const Node root(j, "");
  if (root["format"].as_string() != kFormatName) schema_error("/format", "not a parslit document");
  if (root["version"].as_int() != kFormatVersion) {
    schema_error("/version", "unsupported version " + root["version"].raw().dump());
  }
  Document doc;
  const std::string kind = root["kind"].as_string();
  bool known = false;
  for (DocKind k : {DocKind::Cell, DocKind::Domain, DocKind::Grid, DocKind::Report, DocKind::Periods}) {
    if (kind == to_string(k)) {
      doc.kind = k;
      known = true;
    }
  }
  if (!known) schema_error("/kind", "unknown kind \"" + kind + "\"");
  doc.payload = root["payload"].raw();
  if (root.has("notes")) {
    const Node notes = root["notes"];
    for (std::size_t i = 0; i < notes.size(); ++i) doc.notes.push_back(notes[i].as_string());
  }
  return doc;
}

std::string write_document(const Document& doc) {
  Json j{{"format", kFormatName},
         {"version", kFormatVersion},
         {"kind", to_string(doc.kind)},
         {"payload", doc.payload},
         {"notes", doc.notes}};
  return j.dump(2) + "\n";
}

Document to_document(const CellLabel& label, std::vector<std::string> notes) {
  return {DocKind::Cell, cell_payload(label), std::move(notes)};
}

Document to_document(const ParallelSlitDomain& domain, std::vector<std::string> notes) {
  return {DocKind::Domain, domain_payload(domain), std::move(notes)};
}

// Columns go on the wire right to left, as in the cell data.
Document to_document(const GluedGrid& grid, std::vector<std::string> notes) {
  Json cols = Json::array();
  for (int c = grid.num_columns() - 1; c >= 0; --c) {
    const auto& col = grid.columns()[static_cast<std::size_t>(c)];
    cols.push_back({{"lo", format_ext_rational(col.lo)}, {"hi", format_ext_rational(col.hi)}, {"pi", col.pi.one_line()}});
  }
  Json strips = Json::array();
  for (const auto& st : grid.strips()) {
    strips.push_back({{"lo", format_ext_rational(st.lo)}, {"hi", format_ext_rational(st.hi)}, {"label", st.end_label}});
  }
  return {DocKind::Grid, Json{{"columns", cols}, {"strips", strips}}, std::move(notes)};
}

Document to_document(const CensusReport& r, std::vector<std::string> notes) {
  Json cells = Json::array();
  for (const auto& e : r.cells) {
    cells.push_back({{"cell", cell_payload(e.label)},
                     {"genus_cones", e.genus_cones},
                     {"genus_euler", e.genus_euler},
                     {"punctures", e.punctures},
                     {"zero_x", rational_list(e.zero_x)}});
  }
  Json by_diag = Json::object();
  for (const auto& [d, count] : r.degenerate_by_diagnosis) by_diag[std::string(to_string(d))] = count;
  Json examples = Json::array();
  for (const auto& ex : r.degenerate_examples) {
    Json sig = Json::array();
    for (const auto& s : ex.sigmas) sig.push_back(s.one_line());
    examples.push_back({{"sigma", sig}, {"diagnosis", diagnosis_json(ex.diagnosis)}});
  }
  Json payload{{"g", r.g},
               {"m", r.m},
               {"h", r.h},
               {"method", to_string(r.method)},
               {"candidates", r.candidates},
               {"sigma_count", r.sigma_count},
               {"label_count", r.label_count},
               {"cells", cells},
               {"degenerate", {{"count", r.degenerate_count}, {"by_diagnosis", by_diag}, {"examples", examples}}}};
  return {DocKind::Report, std::move(payload), std::move(notes)};
}

Document to_document(const PeriodMatrix& pm, std::vector<std::string> notes) {
  Json z = Json::array();
  for (const auto& row : pm.z) {
    Json jr = Json::array();
    for (const auto& v : row) jr.push_back(complex_json(v));
    z.push_back(std::move(jr));
  }
  return {DocKind::Periods, Json{{"access", "upper-slit-tip"}, {"z", z}}, std::move(notes)};
}

CellLabel read_cell(const Document& doc) {
  expect_kind(doc, DocKind::Cell);
  return cell_from(Node(doc.payload, "/payload"));
}

ParallelSlitDomain read_domain(const Document& doc) {
  expect_kind(doc, DocKind::Domain);
  return domain_from(Node(doc.payload, "/payload"));
}

GluedGrid read_grid(const Document& doc) {
  expect_kind(doc, DocKind::Grid);
  const Node p(doc.payload, "/payload");
  const Node cols = p["columns"];
  std::vector<Column> columns;
  for (std::size_t i = cols.size(); i-- > 0;) {
    const Node c = cols[i];
    std::vector<int> pi = c["pi"].as_int_list();
    columns.push_back({c["lo"].as_ext_rational(), c["hi"].as_ext_rational(),
                       validated([&] { return Permutation(pi); })});
  }
  const Node sts = p["strips"];
  std::vector<Strip> strips;
  for (std::size_t i = 0; i < sts.size(); ++i) {
    const Node s = sts[i];
    strips.push_back({s["lo"].as_ext_rational(), s["hi"].as_ext_rational(), s["label"].as_small_int()});
  }
  return validated([&] { return GluedGrid(std::move(columns), std::move(strips)); });
}

CensusReport read_report(const Document& doc) {
  expect_kind(doc, DocKind::Report);
  const Node p(doc.payload, "/payload");
  CensusReport r;
  r.g = p["g"].as_small_int();
  r.m = p["m"].as_small_int();
  r.h = p["h"].as_small_int();
  r.method = validated([&] { return parse_census_method(p["method"].as_string()); });
  r.candidates = static_cast<std::uint64_t>(p["candidates"].as_int());
  r.sigma_count = static_cast<std::uint64_t>(p["sigma_count"].as_int());
  r.label_count = static_cast<std::uint64_t>(p["label_count"].as_int());
  const Node cells = p["cells"];
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Node e = cells[i];
    r.cells.push_back({cell_from(e["cell"]), e["genus_cones"].as_small_int(), e["genus_euler"].as_small_int(),
                       e["punctures"].as_small_int(), e["zero_x"].as_rational_list()});
  }
  const Node deg = p["degenerate"];
  r.degenerate_count = static_cast<std::uint64_t>(deg["count"].as_int());
  const Node by = deg["by_diagnosis"];
  if (!by.raw().is_object()) schema_error(by.path(), "expected an object");
  for (const auto& [key, value] : by.raw().items()) {
    const Json name = key;
    const Node count(value, by.path() + "/" + key);
    r.degenerate_by_diagnosis[diagnosis_from(Node(name, count.path()))] = static_cast<std::uint64_t>(count.as_int());
  }
  const Node ex = deg["examples"];
  for (std::size_t i = 0; i < ex.size(); ++i) {
    DegenerateCandidate dc;
    const Node sig = ex[i]["sigma"];
    for (std::size_t k = 0; k < sig.size(); ++k) {
      std::vector<int> one = sig[k].as_int_list();
      dc.sigmas.push_back(validated([&] { return Permutation(one); }));
    }
    dc.diagnosis = diagnosis_from(ex[i]["diagnosis"]);
    r.degenerate_examples.push_back(std::move(dc));
  }
  return r;
}

PeriodMatrix read_periods(const Document& doc) {
  expect_kind(doc, DocKind::Periods);
  const Node p(doc.payload, "/payload");
  if (p["access"].as_string() != "upper-slit-tip") schema_error("/payload/access", "unknown access convention");
  const Node z = p["z"];
  PeriodMatrix pm;
  for (std::size_t k = 0; k < z.size(); ++k) {
    std::vector<ComplexRational> row;
    for (std::size_t l = 0; l < z[k].size(); ++l) row.push_back({z[k][l]["re"].as_rational(), z[k][l]["im"].as_rational()});
    if (row.size() != z.size()) schema_error(z[k].path(), "period matrix must be square");
    pm.z.push_back(std::move(row));
  }
  return pm;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace parslit
