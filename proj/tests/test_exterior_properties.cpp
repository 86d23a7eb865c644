#include "doctest.h"

#include "property_checks.hpp"

using namespace foliage::testing;

namespace {
constexpr int kCases = 1000;
}

TEST_CASE("d o d = 0") { CHECK(count_ddzero_failures(kCases, 101) == 0); }

TEST_CASE("Leibniz rule") { CHECK(count_leibniz_failures(kCases, 202) == 0); }

TEST_CASE("wedge anticommutativity") { CHECK(count_anticommutativity_failures(kCases, 303) == 0); }

TEST_CASE("Euler identity") { CHECK(count_euler_failures(kCases, 404) == 0); }

TEST_CASE("pullback functoriality") { CHECK(count_pullback_failures(kCases, 505) == 0); }
