#include <gtest/gtest.h>

#include <set>

#include "hforge/checks.hpp"

using namespace hforge;

TEST(Registry, NamesUniqueAndCriteriaCovered) {
  std::set<std::string> names;
  std::set<int> criteria;
  for (const auto& c : suite_checks()) {
    EXPECT_TRUE(names.insert(c.module + "/" + c.name).second) << c.name;
    for (int k : c.criteria) criteria.insert(k);
  }
  for (int k = 1; k <= 10; ++k) EXPECT_TRUE(criteria.count(k)) << k;
  EXPECT_EQ(suite_modules(), (std::vector<std::string>{"ffield", "quadspace", "gradedorth", "sympweil", "heckealg", "sp4oracle"}));
}

class RegistryCheck : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RegistryCheck, Passes) {
  const auto& c = suite_checks().at(GetParam());
  const auto o = c.run();
  EXPECT_TRUE(o.pass) << c.module << "/" << c.name << ": " << o.witness;
  EXPECT_GT(o.cases, 0u);
}

INSTANTIATE_TEST_SUITE_P(All, RegistryCheck, ::testing::Range<std::size_t>(0, suite_checks().size()),
                         [](const ::testing::TestParamInfo<std::size_t>& info) {
                           const auto& c = suite_checks().at(info.param);
                           return c.module + "_" + c.name;
                         });
