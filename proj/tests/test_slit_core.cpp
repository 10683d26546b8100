#include <doctest.h>

#include "parslit/census.hpp"
#include "parslit/errors.hpp"
#include "parslit/slit_core.hpp"

using namespace parslit;

namespace {

CellCandidate h1() {
  CellCandidate c;
  c.g = 0;
  c.m = 1;
  c.sigmas = {{1, 2, 0}, {2, 1, 0}};
  c.nu = {{0, 2}, {1}};
  return c;
}

ErrorCode code_of(const CellCandidate& c) {
  try {
    (void)validate_cell_label(c);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a validation error");
  return ErrorCode::InternalAssertion;
}

std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("the h = 1 label validates") {
  const CellLabel label = validate_cell_label(h1());
  CHECK(label.h() == 1);
  CHECK(label.ground() == 3);
  CHECK(label.nu().size() == 2);
  CHECK(label.label_of(2) == 0);
  CHECK(label.label_of(1) == 1);
}

TEST_CASE("validation errors") {
  auto c = h1();
  c.sigmas[1] = {1, 2, 0};
  CHECK(code_of(c) == ErrorCode::CycleCountMismatch);

  c = h1();
  c.sigmas[1] = {0, 2, 1};
  CHECK(code_of(c) == ErrorCode::Fixed2hViolated);

  c = h1();
  c.sigmas[0] = {2, 0, 1};
  CHECK(code_of(c) == ErrorCode::BadSigmaZero);

  c = h1();
  c.nu = {{1}, {0, 2}};
  CHECK(code_of(c) == ErrorCode::NuMismatch);

  c = h1();
  c.nu = {{0, 2}, {0, 2}};
  CHECK(code_of(c) == ErrorCode::NuMismatch);

  c = h1();
  c.sigmas.pop_back();
  CHECK(code_of(c) == ErrorCode::Malformed);

  c = h1();
  c.n = 2;
  CHECK(code_of(c) == ErrorCode::Malformed);
}

TEST_CASE("nu cycles may be given in any rotation") {
  auto c = h1();
  c.nu = {{2, 0}, {1}};
  CHECK(validate_cell_label(c) == validate_cell_label(h1()));
}

TEST_CASE("normalize") {
  const auto x = normalize(q({3}), q({5, 7}));
  CHECK(x.a() == q({0}));
  CHECK(x.b() == q({0, 2}));
  CHECK(normalize(x.a(), x.b()) == x);
  CHECK_THROWS_AS(normalize(q({0}), q({5, 5})), Error);
  CHECK_THROWS_AS(normalize(q({0, 1}), q({0, 1, 2, 3})), Error);
  CHECK_THROWS_AS(normalize(q({0}), q({0})), Error);
  try {
    normalize(q({0}), q({5, 5}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotStrict);
  }
}

TEST_CASE("cell dimensions") {
  CHECK(cell_dimension(standard_label(0, 1)) == 1);
  CHECK(cell_dimension(standard_label(2, 0)) == 10);
  CHECK(cell_dimension(standard_label(1, 1)) == 7);
  CHECK(moduli_dimension(1, 1, 1) == 7);
}

TEST_CASE("property: 3h - 2 = 6g + 3m - 2 for every type with h <= 6") {
  for (int h = 1; h <= 6; ++h) {
    for (int g = 0; 2 * g <= h; ++g) {
      const int m = h - 2 * g;
      const CellLabel label = standard_label(g, m);
      CHECK(label.h() == h);
      CHECK(cell_dimension(label) == 3 * h - 2);
      CHECK(cell_dimension(label) == moduli_dimension(g, 1, m));
      CHECK(cycles(label.sigma(h)).size() == static_cast<std::size_t>(m + 1));
    }
  }
}

TEST_CASE("make_domain checks the coordinate count") {
  CHECK_THROWS_AS(make_domain(standard_label(0, 2), normalize(q({0}), q({0, 1}))), Error);
}
