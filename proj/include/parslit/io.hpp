#ifndef PARSLIT_IO_HPP
#define PARSLIT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "parslit/census.hpp"
#include "parslit/flat_surface.hpp"
#include "parslit/slit_core.hpp"
#include "parslit/uniformizer.hpp"

namespace parslit {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatName = "parslit";
inline constexpr int kFormatVersion = 1;

enum class DocKind { Cell, Domain, Grid, Report, Periods };

std::string_view to_string(DocKind kind);

/// The versioned envelope around every document:
/// {"format": "parslit", "version": 1, "kind": ..., "payload": ..., "notes": [...]}.
struct Document {
  DocKind kind = DocKind::Cell;
  Json payload;
  std::vector<std::string> notes;
};

/// Errors: ParseError (syntax, with byte offset; or schema, with a JSON
/// pointer), including wrong format name, version or unknown kind.
Document parse_document(std::string_view text);
/// Canonical text: two-space indentation and a trailing newline.
std::string write_document(const Document& doc);

Document to_document(const CellLabel& label, std::vector<std::string> notes = {});
Document to_document(const ParallelSlitDomain& domain, std::vector<std::string> notes = {});
Document to_document(const GluedGrid& grid, std::vector<std::string> notes = {});
Document to_document(const CensusReport& report, std::vector<std::string> notes = {});
Document to_document(const PeriodMatrix& periods, std::vector<std::string> notes = {});

// Readers check the kind and the payload shape (ParseError) and then run the
// module validators, whose failures come back as InvariantViolation with the
// validator's code as cause.
CellLabel read_cell(const Document& doc);
ParallelSlitDomain read_domain(const Document& doc);
GluedGrid read_grid(const Document& doc);
CensusReport read_report(const Document& doc);
PeriodMatrix read_periods(const Document& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace parslit

#endif  // PARSLIT_IO_HPP
