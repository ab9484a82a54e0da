#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "chowkit/checks.hpp"

using namespace chowkit;

TEST(Registry, NamesAreUniqueAndCoverEveryPart) {
  const auto& reg = registry();
  EXPECT_GE(reg.size(), 25u);
  std::set<std::string> names, sections;
  const std::regex kebab("[A-Za-z0-9]+(-[A-Za-z0-9]+)*");
  for (const auto& c : reg) {
    EXPECT_TRUE(names.insert(c.name).second) << c.name;
    EXPECT_TRUE(std::regex_match(c.name, kebab)) << c.name;
    EXPECT_FALSE(c.ref.empty()) << c.name;
    sections.insert(c.section);
  }
  EXPECT_EQ(sections, (std::set<std::string>{"1", "2", "3", "4", "props"}));
  for (const char* id : {"deg-FB-24", "alphai-deg-6", "chow-B-presentation", "gensA2B-relation", "EiZi-vanishing",
                         "blowup-consistency", "AI-coefficient", "segre-birational", "relative-canonical-I",
                         "bott-six-weights", "dimension-ledger", "pencil-beta", "K-invariants", "congruence-model",
                         "cubic-locus"})
    EXPECT_NE(find_check(id), nullptr) << id;
  EXPECT_EQ(find_check("nonexistent"), nullptr);
  EXPECT_EQ(find_check("congruence-model")->runtime, Runtime::Slow);
}

TEST(Registry, SectionThreeSuitePasses) {
  std::vector<const Check*> sel;
  for (const auto& c : registry())
    if (c.section == "3") sel.push_back(&c);
  for (const auto& r : run_checks(sel, {1}, 2)) EXPECT_TRUE(r.passed) << r.name;
}

TEST(Registry, TranscriptsAreDeterministic) {
  std::vector<const Check*> sel;
  for (const char* n : {"props-ring-axioms", "quasimonad-maps", "congruence-model", "bott-serre-duality"})
    sel.push_back(find_check(n));
  const auto a = run_checks(sel, {7}, 1);
  const auto b = run_checks(sel, {7}, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].transcript, b[i].transcript);
    EXPECT_TRUE(a[i].passed) << a[i].name;
  }
  // Sorted by name.
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].name, a[i].name);
}

TEST(Registry, DegreeCheckTranscript) {
  const auto r = run_check(*find_check("deg-FB-24"), {1});
  EXPECT_TRUE(r.passed);
  ASSERT_FALSE(r.transcript.empty());
  EXPECT_NE(r.transcript[0].find("computed 24, expected 24"), std::string::npos);
}

TEST(Registry, ExceptionsBecomeFailures) {
  Check bad{"always-throws", "4", "test", Runtime::Fast,
            [](Transcript&, const CheckContext&) { throw DomainError("boom"); }};
  const auto r = run_check(bad, {1});
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.transcript.size(), 1u);
  EXPECT_NE(r.transcript[0].find("boom"), std::string::npos);
}

TEST(Transcript, MismatchFails) {
  Transcript t;
  EXPECT_TRUE(t.expect("a", 1, 1, Source::Identity));
  EXPECT_TRUE(t.passed());
  EXPECT_FALSE(t.expect("b", Rational(1, 2), Rational(1, 3), Source::Derived));
  EXPECT_FALSE(t.passed());
  EXPECT_EQ(t.lines()[1], "b: computed 1/2, expected 1/3 (derived)  MISMATCH");
}
