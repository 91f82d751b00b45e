#include "gcodes/errors.hpp"
#include "gcodes/report.hpp"

#include <gtest/gtest.h>

using namespace gcodes;
using nlohmann::json;

namespace {

json s1_doc() {
    return json::parse(R"({
      "name": "S1",
      "ring": {"modulus": 2},
      "length": 3,
      "group": {"generators": [[2, 3, 1]]},
      "forms": [{"diagonal": "1/2"}],
      "quadratic": [{"table": ["0", "1/2"]}],
      "codes": [{"generators": [[1, 1, 1]]}]
    })");
}

json s4_doc() {
    return json::parse(R"({
      "name": "S4",
      "ring": {"modulus": 2},
      "length": 2,
      "forms": [{"diagonal": "1/2"}],
      "quadratic": [{"square": "1/2"}],
      "codes": [{"generators": [[1, 1]]}]
    })");
}

std::string scenario_path(const std::string& name) { return std::string(GCODES_SCENARIO_DIR) + "/" + name; }

}  // namespace

TEST(Scenario, LoadS1) {
    auto s = load_scenario(scenario_path("s1.json"));
    EXPECT_EQ(s.module.ring().modulus(), 2);
    EXPECT_EQ(s.length, 3);
    EXPECT_EQ(s.group.order(), 3u);
    EXPECT_EQ(ThetaImage(s.group, s.module).t(), 1);
    EXPECT_EQ(s.codes.size(), 1u);
}

TEST(Scenario, Rejections) {
    auto doc = s1_doc();
    doc["group"]["generators"] = json::parse("[[2, 1, 3], [2, 3, 1]]");
    try {
        parse_scenario(doc);
        FAIL() << "expected AssumptionViolated";
    } catch (const AssumptionViolated& e) {
        EXPECT_NE(std::string(e.what()).find("|G| is a unit in R"), std::string::npos);
    }

    doc = s1_doc();
    doc["forms"][0] = json{{"diagonal", "1/0"}};
    EXPECT_THROW(parse_scenario(doc), ParseError);
    doc = s1_doc();
    doc["forms"][0] = json{{"diagonal", "one half"}};
    EXPECT_THROW(parse_scenario(doc), ParseError);
    doc = s1_doc();
    doc.erase("length");
    EXPECT_THROW(parse_scenario(doc), ParseError);
    doc = s1_doc();
    doc["codes"][0]["generators"][0] = json::parse("[1, 1]");
    EXPECT_THROW(parse_scenario(doc), ParseError);
    doc = s1_doc();
    doc["beta0"] = 3;
    EXPECT_THROW(parse_scenario(doc), ParseError);
    doc = s1_doc();
    doc["forms"][0] = json{{"diagonal", "1/3"}};
    EXPECT_THROW(parse_scenario(doc), InvalidForm);
    doc = s1_doc();
    doc["ring"]["modulus"] = 6;
    doc["forms"][0] = json{{"diagonal", "1/2"}};
    doc.erase("quadratic");
    doc.erase("group");
    EXPECT_THROW(parse_scenario(doc), DegenerateForm);
    EXPECT_THROW(load_scenario(scenario_path("no-such-file.json")), ParseError);
}

TEST(Scenario, RoundTrip) {
    for (const auto& name : {"s1.json", "s2.json", "s4.json", "type2_t1.json", "z4_ru.json"}) {
        auto s = load_scenario(scenario_path(name));
        auto doc = scenario_to_json(s);
        EXPECT_EQ(scenario_to_json(parse_scenario(doc)), doc) << name;
    }
}

TEST(Report, RunCheckExamples) {
    auto s1 = parse_scenario(s1_doc());
    auto hwe = run_check(s1, "macwilliams-hwe");
    EXPECT_EQ(hwe.status, CheckStatus::Ok);
    EXPECT_EQ(hwe.payload["codes"][0]["lhs"]["text"], "x + y");
    EXPECT_EQ(hwe.payload["codes"][0]["dual_side"], json::parse("[[0,0,0]]"));
    EXPECT_THROW(run_check(s1, "no-such"), UnknownCheck);
    EXPECT_THROW(build_report(s1, {"no-such"}), UnknownCheck);

    auto s4 = parse_scenario(s4_doc());
    auto conj = run_check(s4, "conjecture");
    EXPECT_EQ(conj.status, CheckStatus::Ok);
    EXPECT_EQ(conj.payload["verdict"], "equal");
    EXPECT_EQ(conj.payload["comparison"]["dim_first"], 1);
    EXPECT_EQ(conj.payload["comparison"]["dim_second"], 1);
}

TEST(Report, CheckTableIsStable) {
    EXPECT_EQ(check_names(), (std::vector<std::string>{"lemma-dual", "hayden", "macwilliams-gmac", "macwilliams-hwe",
                                                      "macwilliams-fwe", "parabolic-invariants",
                                                      "clifford-weil-invariance", "conjecture", "ru-lemma",
                                                      "iota-self-dual"}));
}

TEST(Report, FullReportAndExitStatus) {
    auto s1 = parse_scenario(s1_doc());
    auto r = build_report(s1, {"all"});
    EXPECT_EQ(exit_status(r), 0);
    EXPECT_EQ(r["tool"]["version"], kToolVersion);
    EXPECT_EQ(r["derived"]["t"], 1);
    EXPECT_EQ(r["checks"]["lemma-dual"]["codes"][0]["theta_c"], json::parse("[[0,0,0],[1,1,1]]"));
    EXPECT_EQ(r["checks"]["macwilliams-fwe"]["codes"][0]["transforms"][0][0][0], "1");
    EXPECT_EQ(r["checks"]["clifford-weil-invariance"]["status"], "skipped");
    EXPECT_EQ(r["checks"].size(), check_names().size());
    EXPECT_EQ(emit_json(r), emit_json(build_report(s1, {"all"})));
    EXPECT_NE(emit_text(r).find("macwilliams-hwe: ok"), std::string::npos);

    // a cap hit during a check is exit status 3
    s1.caps.ambient = 4;
    auto capped = build_report(s1, {"hayden"});
    EXPECT_EQ(capped["checks"]["hayden"]["status"], "error");
    EXPECT_EQ(exit_status(capped), 3);
}

TEST(Corpus, UnitFilterAndOrder) {
    auto two = corpus_generate({{2}, 2});
    for (const auto& s : two) EXPECT_EQ(s.group.order(), 1u);
    EXPECT_EQ(two.size(), 2u * 3u);  // n = 1, 2; three Phi options

    auto three = corpus_generate({{3}, 2});
    bool has_swap = false;
    for (const auto& s : three) has_swap |= s.length == 2 && s.group.order() == 2;
    EXPECT_TRUE(has_swap);

    EXPECT_TRUE(corpus_generate({{}, 3}).empty());
    EXPECT_TRUE(corpus_generate({{2, 3}, 0}).empty());

    auto again = corpus_generate({{3}, 2});
    ASSERT_EQ(again.size(), three.size());
    for (std::size_t i = 0; i < three.size(); ++i) EXPECT_EQ(scenario_to_json(again[i]), scenario_to_json(three[i]));
}
