#ifndef PARSLIT_CENSUS_HPP
#define PARSLIT_CENSUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "parslit/flat_surface.hpp"
#include "parslit/slit_core.hpp"

namespace parslit {

enum class CensusMethod { Brute, Stepped };

std::string_view to_string(CensusMethod method);
/// Errors: Malformed for anything other than "brute" or "stepped".
CensusMethod parse_census_method(std::string_view text);

/// Invariants of one cell, measured on its sample domain.
struct CensusEntry {
  CellLabel label;
  int genus_cones = 0;
  int genus_euler = 0;
  int punctures = 0;  // m + 1
  std::vector<Rational> zero_x;  // critical values, descending
};

/// A sigma sequence with the right genus and cycle count whose sample
/// surface is nevertheless not generic.
struct DegenerateCandidate {
  std::vector<Permutation> sigmas;
  Diagnosis diagnosis = Diagnosis::Generic;
};

struct CensusReport {
  int g = 0;
  int m = 0;
  int h = 0;
  CensusMethod method = CensusMethod::Brute;
  std::uint64_t candidates = 0;     // size of the search space
  std::uint64_t sigma_count = 0;    // valid sigma sequences
  std::uint64_t label_count = 0;    // with every nu labeling
  std::vector<CensusEntry> cells;   // sorted by label
  /// Right genus and cycle count, not generic at the sample coordinates.
  std::uint64_t degenerate_count = 0;
  std::map<Diagnosis, std::uint64_t> degenerate_by_diagnosis;
  std::vector<DegenerateCandidate> degenerate_examples;  // the first few found
};

inline constexpr std::size_t kDegenerateExamples = 16;

struct CensusOptions {
  std::uint64_t bound = 10'000'000;
  /// Send degenerate candidates through the full surface computation too,
  /// instead of classifying them from the wall monodromies alone.
  bool thorough = false;
};

/// Errors: Malformed for negative g, m or h = 0; TooLarge when the candidate
/// space exceeds the bound.
CensusReport enumerate_cells(int g, int m, CensusMethod method, const CensusOptions& options = {});

/// The label with coordinates a_i = -i, b_j = j, normalized.
ParallelSlitDomain sample_domain(const CellLabel& label);

/// A fixed valid label of type (g, m): g interleaved pairs of transpositions
/// followed by m adjacent ones, with nu in canonical order.
CellLabel standard_label(int g, int m);

/// Every labeling nu of the cycles of sigma_h compatible with nu(0) owning 0,
/// in lexicographic order.
std::vector<CellLabel> all_labelings(int g, int m, const std::vector<Permutation>& sigmas);

}  // namespace parslit

#endif  // PARSLIT_CENSUS_HPP
