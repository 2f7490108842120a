#include <doctest.h>

#include <algorithm>
#include <set>

#include "lmt/verify.hpp"

using namespace lmt;

TEST_CASE("small corpus passes the whole suite") {
    const auto corpus = make_corpus(24, 4242, 2, 6);
    const VerifyReport rep = verify_suite(corpus);
    for (const CheckResult& c : rep.checks) {
        INFO(c.name, " margin=", c.margin);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
    CHECK(rep.corpusSize == 24);
}

TEST_CASE("reports are byte-identical across runs, timing excluded") {
    const auto corpus = make_corpus(10, 42, 2, 5);
    VerifyOptions opts;
    opts.threads = 2;
    const std::string a = report_to_json(verify_suite(corpus, opts));
    const std::string b = report_to_json(verify_suite(corpus, opts));
    CHECK(a == b);
    // thread count must not leak into the report either
    opts.threads = 1;
    CHECK(report_to_json(verify_suite(corpus, opts)) == a);
}

TEST_CASE("every emitted anchor is in the published catalog") {
    const auto corpus = make_corpus(8, 7, 2, 4);
    const VerifyReport rep = verify_suite(corpus);
    const auto anchors = catalog_anchors();
    const std::set<std::string> known(anchors.begin(), anchors.end());
    std::set<std::string> emitted;
    for (const CheckResult& c : rep.checks) {
        CHECK(known.count(c.theoremAnchor) == 1);
        CHECK(!c.theoremAnchor.empty());
        emitted.insert(c.theoremAnchor);
    }
    // no orphaned corpus-side anchors: everything the catalog promises
    // for corpus checks showed up in a full-feature run
    for (const std::string& a : known)
        if (a.rfind("Example", 0) != 0 && a != "Remark 4.6" && a != "Remark 4.8" &&
            a != "complex-symmetry examples")
            CHECK(emitted.count(a) == 1);
}

TEST_CASE("paper examples reproduce and carry their anchors") {
    const VerifyReport rep = paper_examples();
    CHECK(rep.all_pass());
    const auto anchors = catalog_anchors();
    const std::set<std::string> known(anchors.begin(), anchors.end());
    for (const CheckResult& c : rep.checks) CHECK(known.count(c.theoremAnchor) == 1);
    // the fixed-value rows all present
    std::set<std::string> names;
    for (const CheckResult& c : rep.checks) names.insert(c.name);
    for (const char* expected :
         {"example-norm-mean", "example-radius-integral", "example-cross-term",
          "example-spectrum", "example-shift-mean-hyponormal", "example-cs-palindrome",
          "example-cs-constructed", "example-aluthge-zero"})
        CHECK(names.count(expected) == 1);
}

TEST_CASE("equivalence-only runs skip the inequality checks") {
    const auto corpus = make_corpus(6, 99, 2, 4);
    VerifyOptions opts;
    opts.inequalities = false;
    opts.closedForms = false;
    const VerifyReport rep = verify_suite(corpus, opts);
    CHECK(rep.all_pass());
    for (const CheckResult& c : rep.checks) {
        CHECK(c.name != std::string("radius-heinz-bounds"));
        CHECK(c.name != std::string("radius-integral-sandwich"));
    }
}
