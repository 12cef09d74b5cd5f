#include <doctest.h>

#include "ordcert/report.hpp"

using namespace ordcert;

TEST_CASE("parameter validation") {
    CertifyParams p;
    p.r = 3;
    p.resolve();
    CHECK(p.p == 103);  // smallest prime >= 101 with p = 1 mod 3
    CHECK(p.depth == 10);
    CHECK(p.data == std::vector<int>{1, 1, 1});

    CertifyParams bad;
    bad.r = 4;
    bad.p = 2;
    CHECK_THROWS_AS(bad.resolve(), std::invalid_argument);  // p divides r

    CertifyParams bad2;
    bad2.r = 0;
    CHECK_THROWS_AS(bad2.resolve(), std::invalid_argument);

    CertifyParams bad3;
    bad3.r = 2;
    bad3.data = {1, 1, 1};
    CHECK_THROWS_AS(bad3.resolve(), std::invalid_argument);  // data length != r

    CertifyParams bad4;
    bad4.r = 2;
    bad4.p = 9;
    CHECK_THROWS_AS(bad4.resolve(), std::invalid_argument);  // not prime
}

TEST_CASE("full certification run passes and serializes") {
    CertifyParams p;
    p.r = 2;
    p.p = 13;
    p.seed = 7;
    CertificationReport report = certify(p);
    CHECK(report.all_pass());
    CHECK(report.first_failure() == nullptr);

    // JSON schema: top-level keys and per-check keys
    auto j = report.to_json();
    CHECK(j.contains("params"));
    CHECK(j.contains("checks"));
    CHECK(j.contains("version"));
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("anchor"));
        CHECK(c.contains("status"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("got"));
        CHECK(c.contains("ms"));
        std::string st = c["status"].get<std::string>();
        CHECK((st == "pass" || st == "fail" || st == "skipped"));
    }

    // round trip
    CertificationReport back = CertificationReport::from_json(j);
    CHECK(back.same_results(report));
    CHECK(back.to_json() == [&] {
        auto jj = j;
        return jj;
    }());

    // determinism given the seed
    CertificationReport again = certify(p);
    CHECK(again.same_results(report));

    // check ids are unique
    std::vector<std::string> ids;
    for (const auto& c : report.checks) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
}

TEST_CASE("degenerate r = 1 report skips the block checks") {
    CertifyParams p;
    p.r = 1;
    p.seed = 3;
    CertificationReport report = certify(p);
    CHECK(report.all_pass());
    bool saw_skip = false;
    for (const auto& c : report.checks)
        if (c.status == "skipped") saw_skip = true;
    CHECK(saw_skip);
}

TEST_CASE("text rendering mentions every check") {
    CertifyParams p;
    p.r = 2;
    p.p = 5;
    CertificationReport report = certify(p);
    std::string text = report.to_text();
    for (const auto& c : report.checks) CHECK(text.find(c.id) != std::string::npos);
}
