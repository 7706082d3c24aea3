#include "doctest.h"

#include "properties.hpp"

TEST_CASE("property suites with an independent seed") {
    for (const auto& s : props::all_suites(300, 0xabcdef)) {
        CAPTURE(s.name);
        CAPTURE(s.first_failure);
        CHECK(s.cases == 300);
        CHECK(s.failures == 0);
    }
}
