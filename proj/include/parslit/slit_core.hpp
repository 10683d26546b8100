#ifndef PARSLIT_SLIT_CORE_HPP
#define PARSLIT_SLIT_CORE_HPP

#include <vector>

#include "parslit/permutation.hpp"
#include "parslit/rational.hpp"

namespace parslit {

/// Unchecked cell data as it arrives from a document or a generator.
struct CellCandidate {
  int g = 0;
  int m = 0;
  int n = 1;
  std::vector<std::vector<int>> sigmas;  // sigma_0 .. sigma_h, one-line form
  std::vector<std::vector<int>> nu;      // nu[k] = a cycle of sigma_h, any rotation
};

/// Combinatorial index of a top-dimensional cell of Par_{g,1,m}.
///
/// Only obtainable through validate_cell_label, so a value of this type always
/// satisfies: h = 2g + m >= 1; sigma_0 is the long cycle j -> j + 1;
/// sigma_i(2h) = 0 for all i; sigma_h has m + 1 cycles and nu is a bijection
/// from {0..m} onto them with nu(0) the cycle containing 0.
class CellLabel {
 public:
  int g() const noexcept { return g_; }
  int m() const noexcept { return m_; }
  /// Number of directed dipole points; always 1 here, carried for documents.
  int n() const noexcept { return 1; }
  int h() const noexcept { return 2 * g_ + m_; }
  /// 2h + 1, the size of the ground set.
  int ground() const noexcept { return 2 * h() + 1; }

  const std::vector<Permutation>& sigmas() const noexcept { return sigmas_; }
  const Permutation& sigma(int i) const { return sigmas_.at(static_cast<std::size_t>(i)); }
  /// nu()[k] is the cycle of sigma_h labelled k, in canonical rotation.
  const std::vector<Cycle>& nu() const noexcept { return nu_; }
  /// Puncture label of the cycle of sigma_h containing level x.
  int label_of(int x) const;

  friend bool operator==(const CellLabel&, const CellLabel&) = default;
  friend auto operator<=>(const CellLabel&, const CellLabel&) = default;

 private:
  friend CellLabel validate_cell_label(const CellCandidate& candidate);
  CellLabel() = default;

  int g_ = 0;
  int m_ = 0;
  std::vector<Permutation> sigmas_;
  std::vector<Cycle> nu_;
};

/// Checks every CellLabel invariant. Errors: Malformed, BadSigmaZero,
/// Fixed2hViolated, CycleCountMismatch, NuMismatch.
CellLabel validate_cell_label(const CellCandidate& candidate);

CellCandidate to_candidate(const CellLabel& label);

/// Normalized slit coordinates: a_1 > ... > a_h with a_1 = 0 and
/// b_1 < ... < b_{2h} with b_1 = 0. Vectors are 0-based (a()[0] is a_1).
class SlitCoordinates {
 public:
  const std::vector<Rational>& a() const noexcept { return a_; }
  const std::vector<Rational>& b() const noexcept { return b_; }
  std::size_t h() const noexcept { return a_.size(); }

  friend bool operator==(const SlitCoordinates&, const SlitCoordinates&) = default;

 private:
  friend SlitCoordinates normalize(std::vector<Rational> a, std::vector<Rational> b);
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

/// Translates so that a_1 = b_1 = 0. Throws NotStrict on ties or wrong order,
/// Malformed if a is empty or |b| != 2|a|.
SlitCoordinates normalize(std::vector<Rational> a, std::vector<Rational> b);

/// A point of a top-dimensional cell.
struct ParallelSlitDomain {
  CellLabel label;
  SlitCoordinates coords;

  friend bool operator==(const ParallelSlitDomain&, const ParallelSlitDomain&) = default;
};

/// Throws Malformed when the coordinate counts do not match label.h().
ParallelSlitDomain make_domain(CellLabel label, SlitCoordinates coords);

/// Dimension of the cell: (h - 1) + (2h - 1).
int cell_dimension(const CellLabel& label);

/// Real dimension of the moduli space of dipole functions of type (g, n, m).
int moduli_dimension(int g, int n, int m);

}  // namespace parslit

#endif  // PARSLIT_SLIT_CORE_HPP
