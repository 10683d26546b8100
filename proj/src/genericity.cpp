#include <algorithm>
#include <string>

#include "parslit/errors.hpp"
#include "parslit/flat_surface.hpp"
#include "parslit/uniformizer.hpp"

namespace parslit {

std::string_view to_string(Diagnosis d) {
  switch (d) {
    case Diagnosis::Generic: return "Generic";
    case Diagnosis::CoincidentLevels: return "CoincidentLevels";
    case Diagnosis::NoZeros: return "NoZeros";
    case Diagnosis::NonSimpleOrColocated: return "NonSimpleOrColocated";
    case Diagnosis::SaddleConnection: return "SaddleConnection";
  }
  return "Unknown";
}

GenericityReport is_generic(const GluedGrid& grid) {
  auto fail = [](Diagnosis d, std::string detail) {
    return GenericityReport{false, d, std::move(detail)};
  };

  for (int s = 0; s < grid.num_strips(); ++s) {
    const auto ht = grid.height(s);
    if (ht.is_finite() && ht.value() == 0) {
      return fail(Diagnosis::CoincidentLevels,
                  "strip " + std::to_string(s) + " has height 0, two seam levels coincide");
    }
  }

  const ConeData cones = cone_points(grid);
  const auto zeros = cones.zeros();
  for (const auto& z : zeros) {
    if (z.k() != 2) {
      return fail(Diagnosis::NonSimpleOrColocated,
                  "zero of order " + std::to_string(z.k() - 1) + " on wall " + std::to_string(z.wall));
    }
  }
  if (zeros.empty()) return fail(Diagnosis::NoZeros, "omega has no zeros");

  const EulerData euler = euler_data(grid);
  const int h = 2 * euler.genus + static_cast<int>(euler.circuits) - 1;
  PARSLIT_ASSERT(static_cast<int>(zeros.size()) == h);

  for (std::size_t i = 0; i < zeros.size(); ++i) {
    for (std::size_t j = i + 1; j < zeros.size(); ++j) {
      if (zeros[i].x == zeros[j].x) {
        return fail(Diagnosis::NonSimpleOrColocated,
                    "two zeros share the critical value x = " + format_rational(zeros[i].x));
      }
    }
  }

  try {
    (void)trace_critical_graph(grid);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SaddleConnection) throw;
    return fail(Diagnosis::SaddleConnection, e.what());
  }
  return {true, Diagnosis::Generic, ""};
}

}  // namespace parslit
