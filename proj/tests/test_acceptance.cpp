#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "torfol/verify.hpp"

using namespace torfol;

TEST_CASE("acceptance criteria") {
    auto results = verify::run_all([](const verify::CriterionResult& r) {
        std::printf("%s\n", verify::format_line(r).c_str());
        std::fflush(stdout);
    });
    for (const auto& r : results) {
        INFO(verify::format_line(r));
        CHECK(r.passed);
    }
}
