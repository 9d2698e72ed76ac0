#include <gtest/gtest.h>

#include <set>

#include "json.hpp"
#include "superdom/harness.hpp"

using namespace superdom;

TEST(Registry, CoversEveryIdOnce) {
  const auto ids = all_theorems();
  EXPECT_EQ(ids.size(), 24U);
  std::set<std::string_view> names;
  for (TheoremId id : ids) {
    names.insert(to_string(id));
    EXPECT_EQ(parse_theorem_id(to_string(id)), id);
    EXPECT_FALSE(theorem_statement(id).empty());
  }
  EXPECT_EQ(names.size(), ids.size());
  EXPECT_EQ(parse_theorem_id("thm7-familyF"), TheoremId::thm7_family_f);
  EXPECT_EQ(parse_theorem_id("cor-nphard-reduction"), TheoremId::cor_nphard_reduction);
  EXPECT_THROW(parse_theorem_id("thm99"), std::invalid_argument);
}

TEST(Verify, SpecExamples) {
  const TheoremCheck thm7 = verify(TheoremId::thm7_family_f, enumerate_labeled(6, CorpusFilter::connected));
  EXPECT_TRUE(thm7.passed());
  EXPECT_EQ(thm7.instances, 26704U);
  const TheoremCheck gallai = verify(TheoremId::gallai, enumerate_labeled(5));
  EXPECT_TRUE(gallai.passed());
  EXPECT_EQ(gallai.instances, 1024U);
  const TheoremCheck thm1 = verify(TheoremId::thm1, enumerate_labeled(4));
  EXPECT_TRUE(thm1.passed());
  EXPECT_THROW(verify(TheoremId::thm10, enumerate_labeled(3)), std::invalid_argument);
}

TEST(Verify, SkipAccounting) {
  const TheoremCheck c = verify(TheoremId::lemma3, enumerate_labeled(5, CorpusFilter::connected));
  EXPECT_EQ(c.instances, c.passes + c.failure_count + c.skipped);
  EXPECT_GT(c.skipped, 0U);
  EXPECT_GT(c.passes, 0U);
}

TEST(Verify, FailuresAreRecorded) {
  // A deliberately false statement run through the same machinery.
  TheoremCheck c;
  const Corpus corpus = enumerate_labeled(3);
  run_indexed(
      corpus.raw_size(),
      [&](std::uint64_t i) {
        const Graph g = *corpus.item(i);
        return g.size() < 3 ? Outcome::pass() : Outcome::fail({"Bw"}, "no triangle", "triangle");
      },
      RunOptions{1}, c);
  EXPECT_EQ(c.failure_count, 1U);
  ASSERT_EQ(c.failures.size(), 1U);
  EXPECT_EQ(c.failures[0].graphs[0], "Bw");
  EXPECT_FALSE(c.passed());
}

TEST(Runner, ExceptionsBecomeFailures) {
  TheoremCheck c;
  run_indexed(
      4, [](std::uint64_t i) -> Outcome {
        if (i == 2) throw std::runtime_error("boom");
        return Outcome::pass();
      },
      RunOptions{1}, c);
  EXPECT_EQ(c.passes, 3U);
  EXPECT_EQ(c.failure_count, 1U);
  EXPECT_EQ(c.failures[0].got, "exception: boom");
}

TEST(Runner, ParallelMatchesSerial) {
  const Corpus corpus = enumerate_labeled(6);
  const TheoremCheck serial = verify(TheoremId::thm1, corpus, RunOptions{1});
  const TheoremCheck parallel = verify(TheoremId::thm1, corpus, RunOptions{4});
  EXPECT_EQ(serial.instances, parallel.instances);
  EXPECT_EQ(serial.passes, parallel.passes);
  EXPECT_EQ(serial.skipped, parallel.skipped);
}

TEST(IntegerLemmas, WindowPredicates) {
  EXPECT_TRUE(cycle_has_dense_window(6, VertexSet::of({5, 0, 1, 2, 3})));  // wraps around
  EXPECT_TRUE(cycle_has_dense_window(7, VertexSet::of({6, 1, 2, 3})));      // {i, i+2, i+3, i+4}
  EXPECT_FALSE(cycle_has_dense_window(6, VertexSet::of({0, 1, 3, 4})));
  EXPECT_TRUE(path_has_dense_window(6, VertexSet::of({3, 4, 5})));
  EXPECT_FALSE(path_has_dense_window(6, VertexSet::of({1, 2, 4})));
  EXPECT_FALSE(path_has_dense_window(7, VertexSet::of({0, 1, 3, 4, 6})));
  const TheoremCheck c = verify_integer(TheoremId::lemma15, 5, 12);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.instances, 8U);
  EXPECT_TRUE(verify_integer(TheoremId::lemma18, 4, 12).passed());
}

TEST(ProductSweep, SpecExamples) {
  const TheoremId ids[] = {TheoremId::thm10, TheoremId::thm11, TheoremId::thm12, TheoremId::lemma_important};
  const auto checks = product_sweep(Corpus::enumerated_range(2, 3, CorpusFilter::connected),
                                    Corpus::enumerated_range(2, 3, CorpusFilter::nonempty), ids, 16);
  ASSERT_EQ(checks.size(), 4U);
  for (const TheoremCheck& c : checks) {
    EXPECT_TRUE(c.passed()) << to_string(c.id);
    EXPECT_EQ(c.instances, 5U * 8U);  // 5 connected G x 8 nonempty H
  }
}

TEST(ProductSweep, CapExcludesPairs) {
  const TheoremId ids[] = {TheoremId::thm12};
  const auto checks = product_sweep(Corpus::enumerated(3, CorpusFilter::connected),
                                    Corpus::enumerated(3, CorpusFilter::nonempty), ids, 8);
  EXPECT_EQ(checks[0].instances, 0U);
}

TEST(Report, EmptyListIsHeaderOnly) {
  const std::vector<TheoremCheck> none;
  EXPECT_EQ(report(none, ReportFormat::csv), "theorem_id,corpus,instances,failures,elapsed_ms\r\n");
  const auto j = nlohmann::json::parse(report(none, ReportFormat::json));
  EXPECT_TRUE(j["checks"].empty());
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_NE(report(none, ReportFormat::markdown).find("| theorem_id |"), std::string::npos);
}

TEST(Report, CsvQuotingAndFieldOrder) {
  TheoremCheck c;
  c.id = TheoremId::thm12;
  c.corpus = "G:a,b x H:\"q\"";
  c.instances = 5;
  c.failure_count = 1;
  c.failures.push_back({{"A_", "Bw"}, "<= 3", "gamma_sp=4"});
  const std::vector<TheoremCheck> checks{c};
  EXPECT_EQ(report(checks, ReportFormat::csv, {false}),
            "theorem_id,corpus,instances,failures,elapsed_ms\r\nthm12,\"G:a,b x H:\"\"q\"\"\",5,1,\r\n");
  const std::string json = report(checks, ReportFormat::json, {false});
  EXPECT_EQ(json.find("elapsed_ms"), std::string::npos);
  const auto j = nlohmann::json::parse(json);
  EXPECT_EQ(j["checks"][0]["failures"][0]["graphs"][1], "Bw");
  EXPECT_LT(json.find("theorem_id"), json.find("corpus_id"));
  EXPECT_LT(json.find("corpus_id"), json.find("instances"));
  EXPECT_EQ(parse_report_format("md"), ReportFormat::markdown);
  EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
}

TEST(Campaign, DeterministicAcrossWorkerCounts) {
  CampaignConfig serial{4, RunOptions{1}};
  CampaignConfig parallel{4, RunOptions{8}};
  const auto a = run_campaign(serial);
  const auto b = run_campaign(parallel);
  EXPECT_EQ(a.size(), 24U);
  EXPECT_EQ(report(a, ReportFormat::json, {false}), report(b, ReportFormat::json, {false}));
  for (const TheoremCheck& c : a) EXPECT_TRUE(c.passed()) << to_string(c.id);
}
