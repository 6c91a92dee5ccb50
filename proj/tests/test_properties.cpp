#include <doctest.h>

#include "properties.hpp"

using namespace dgalab;

TEST_CASE("algebra laws on 1000 random samples per fixture") {
  std::uint64_t seed = 1;
  for (const char* f : {"a1.dga", "a2.dga", "a3.dga", "a4.dga", "s2.dga"})
    CHECK_MESSAGE(properties::algebra_laws(load_dga(oracle::fixture(f)).dga, 1000, seed++) == 0, f);
}

TEST_CASE("coset representatives are stable under coboundary perturbation") {
  auto h = std::make_shared<Cohomology>(load_dga(oracle::fixture("a1.dga")).dga);
  for (int n : {4, 8, 13, 21, 32, 45, 64})
    CHECK_MESSAGE(properties::coset_stability(*h, n, 100, 100 + n) == 0, "degree " << n);
  auto h3 = std::make_shared<Cohomology>(load_dga(oracle::fixture("a3.dga")).dga);
  for (int n : {16, 104, 208}) CHECK(properties::coset_stability(*h3, n, 100, 300 + n) == 0);
}

TEST_CASE("cup products are graded commutative and associative") {
  auto h = std::make_shared<Cohomology>(load_dga(oracle::fixture("a1.dga")).dga);
  CHECK(properties::cup_laws(*h, {2, 4, 8, 13, 15, 17}, 200, 9) == 0);
}
