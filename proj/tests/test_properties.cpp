#include <doctest.h>

#include "f4_vectors.hpp"
#include "properties.hpp"

namespace {

void check_suite(const props::SuiteResult& r) {
  INFO(r.name << ": " << r.cases << " cases, " << r.failures << " failures; " << r.first_failure);
  CHECK(r.failures == 0);
  CHECK(r.passed());
}

constexpr std::uint32_t kSeed = 20240611;

} // namespace

TEST_CASE("property: reflection involution") { check_suite(props::reflection_involution(kSeed)); }
TEST_CASE("property: coset polynomials") { check_suite(props::coset_polynomials()); }
TEST_CASE("property: BWB dichotomy") { check_suite(props::bwb_dichotomy(kSeed)); }
TEST_CASE("property: Freudenthal totals") { check_suite(props::freudenthal_totals(kSeed)); }
TEST_CASE("property: duality") { check_suite(props::duality(kSeed)); }
TEST_CASE("property: decompose_levi partition") { check_suite(props::decompose_partition(kSeed)); }
TEST_CASE("property: IGr agreement") { check_suite(props::igr_agreement()); }
TEST_CASE("property: line bundle support") { check_suite(props::line_bundle_support(kSeed)); }

TEST_CASE("property suites under other seeds") {
  for (std::uint32_t seed : {1u, 7u, 99u})
    for (const auto& r : props::run_all(seed)) check_suite(r);
}

TEST_CASE("F4 vectors") {
  for (const auto& c : vectors::f4_checks()) {
    INFO(c.name << " " << c.detail);
    CHECK(c.ok);
  }
}
