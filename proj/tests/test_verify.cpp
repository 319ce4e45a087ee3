#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "cwskit/errors.hpp"
#include "cwskit/verify.hpp"

using namespace cwskit;

namespace {

VerifyOptions small_options() {
    VerifyOptions options;
    options.corpus.exhaustive_max_n = 5;
    options.corpus.random_count = 20;
    options.cws_instances = 150;
    options.cws_max_n = 7;
    return options;
}

} // namespace

TEST_CASE("the suite list is fixed") {
    CHECK(suite_names().size() == 7);
    CHECK(suite_names().front() == "diag-range");
    CHECK(suite_names().back() == "graph6-roundtrip");
}

TEST_CASE("all suites pass on a small corpus") {
    const auto results = run_all_suites(small_options());
    REQUIRE(results.size() == suite_names().size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        CAPTURE(results[i].name);
        CHECK(results[i].name == suite_names()[i]);
        CHECK(results[i].pass());
        CHECK(results[i].failures == 0);
        CHECK(results[i].checked > 0);
        CHECK(results[i].counterexamples.empty());
    }
}

TEST_CASE("single suites run standalone") {
    const SuiteResult diag = run_suite("diag-range", small_options());
    CHECK(diag.name == "diag-range");
    CHECK(diag.pass());
    CHECK(diag.checked == 48); // exhaustive 3..5 plus 20 random graphs

    const SuiteResult deg = run_suite("degeneracy-conditions", small_options());
    CHECK(deg.pass());
    CHECK(deg.checked == 150);
    CHECK_FALSE(deg.notes.empty());

    CHECK_THROWS_AS((void)run_suite("no-such-suite", small_options()), DomainError);
}
