#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "hoggatt/format.hpp"
#include "hoggatt/sweep.hpp"

using namespace hoggatt;

TEST_CASE("range parsing")
{
    CHECK(Range::parse("2..5").lo == 2);
    CHECK(Range::parse("2..5").hi == 5);
    CHECK(Range::parse("7").lo == 7);
    CHECK(Range::parse("7").hi == 7);
    CHECK(Range::parse("-1..0").lo == -1);
    CHECK(Range::parse("3..1").empty());
    CHECK(Range{2, 4}.to_string() == "2..4");
    CHECK(Range{2, 4}.contains(4));
    CHECK_FALSE(Range{2, 4}.contains(5));
    CHECK_THROWS_AS(Range::parse(""), Error);
    CHECK_THROWS_AS(Range::parse("1..2..3"), Error);
    CHECK_THROWS_AS(Range::parse("a..b"), Error);
}

TEST_CASE("check registry round-trips")
{
    for (Check c : all_checks()) {
        CHECK(parse_check(to_string(c)) == c);
    }
    CHECK(all_checks().size() == 10);
    CHECK_THROWS_AS(parse_check("theorem3"), Error);
}

TEST_CASE("config validation")
{
    SweepConfig ok;
    CHECK_NOTHROW(ok.validate());
    SweepConfig empty_range;
    empty_range.m = {3, 2};
    CHECK_THROWS_AS(empty_range.validate(), Error);
    SweepConfig zero_margin;
    zero_margin.margin = 0;
    CHECK_THROWS_AS(zero_margin.validate(), Error);
}

TEST_CASE("thread count honours the environment")
{
    ::setenv("HOGGATT_HANKEL_THREADS", "3", 1);
    CHECK(default_thread_count() == 3);
    ::setenv("HOGGATT_HANKEL_THREADS", "junk", 1);
    CHECK(default_thread_count() >= 1);
    ::unsetenv("HOGGATT_HANKEL_THREADS");
    CHECK(default_thread_count() >= 1);
}

TEST_CASE("no checks means no reports")
{
    SweepConfig cfg;
    CHECK(sweep(cfg).empty());
}

TEST_CASE("proved identities pass on a small grid")
{
    SweepConfig cfg;
    cfg.checks = {Check::Theorem1, Check::Theorem2, Check::Condensation};
    cfg.r = {1, 3};
    cfg.m = {0, 8};
    cfg.k = {0, 12};
    const auto reports = sweep(cfg);
    CHECK_FALSE(reports.empty());
    const auto s = summarize(reports);
    CHECK(s.failed == 0);
    CHECK(s.mismatched == 0);
    CHECK(s.passed == s.total);
}

TEST_CASE("out-of-budget points are skipped, not dropped")
{
    SweepConfig cfg;
    cfg.checks = {Check::Conjecture3};
    cfg.s = {2, 2};
    cfg.r = {2, 2};
    cfg.m = {1, 6};
    cfg.budget = 10;
    const auto reports = sweep(cfg);
    bool skipped = false;
    for (const auto& r : reports) {
        if (r.id == "conjecture3" && r.status == Status::Skipped) {
            skipped = true;
        }
    }
    CHECK(skipped);
    CHECK(reports.back().id == "conjecture3.catalan_value_reading");
}

TEST_CASE("output order follows the registry and parameters")
{
    SweepConfig cfg;
    cfg.checks = {Check::Catalan, Check::Theorem1};
    cfg.r = {1, 2};
    cfg.m = {1, 2};
    cfg.k = {0, 1};
    cfg.threads = 4;
    const auto reports = sweep(cfg);
    REQUIRE_FALSE(reports.empty());
    CHECK(reports.front().id == "theorem1");
    CHECK(reports.back().id == "catalan");
    cfg.threads = 1;
    const auto serial = sweep(cfg);
    CHECK(render_reports(cfg, reports, Format::Json) == render_reports(cfg, serial, Format::Json));
}

TEST_CASE("csv quoting")
{
    SweepConfig cfg;
    VerificationReport rep;
    rep.id = "x";
    rep.params = {{"s", 1}, {"k", 4}};
    rep.lhs = "1 + 3x";
    rep.notes = {"a, b", "say \"hi\""};
    const auto csv = render_reports(cfg, {rep}, Format::Csv);
    CHECK(csv == "id,s,m,r,k,status,lhs,rhs,notes\nx,1,,,4,pass,1 + 3x,,\"a, b | say \"\"hi\"\"\"\n");
}

TEST_CASE("format names")
{
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_THROWS_AS(parse_format("JSON"), Error);
}
