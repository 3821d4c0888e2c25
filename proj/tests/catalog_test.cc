#include <gtest/gtest.h>

#include <algorithm>

#include "ftd/catalog.h"

namespace {

TEST(Catalog, EntryIdsAreUnique) {
  const auto& es = ftd::catalog_entries();
  ASSERT_FALSE(es.empty());
  std::vector<std::string> ids;
  for (const auto& e : es) {
    ids.push_back(e.id);
    EXPECT_FALSE(e.recipe.empty()) << e.id;
    if (e.expected.p != 0) {
      EXPECT_TRUE(e.expected.consistent()) << e.id;
    }
  }
  std::sort(ids.begin(), ids.end());
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
}

TEST(Catalog, SelectionByIdAndGlob) {
  ftd::CatalogConfig cfg;
  cfg.entries = {"thm1-case6-*"};
  EXPECT_EQ(ftd::select_entries(cfg), (std::vector<std::string>{"thm1-case6-q4", "thm1-case6-q9"}));
  cfg.entries = {"thm1-case11"};
  EXPECT_EQ(ftd::select_entries(cfg).size(), 1u);
  cfg.entries = {"nothing-*"};
  EXPECT_THROW(ftd::select_entries(cfg), ftd::CatalogError);
}

TEST(Catalog, LargeEntriesNeedTheFlag) {
  ftd::CatalogConfig cfg;
  const auto normal = ftd::select_entries(cfg);
  cfg.large = true;
  const auto with_large = ftd::select_entries(cfg);
  EXPECT_GT(with_large.size(), normal.size());
  for (const auto& e : ftd::catalog_entries()) {
    const bool in_normal = std::find(normal.begin(), normal.end(), e.id) != normal.end();
    EXPECT_EQ(in_normal, !e.large) << e.id;
  }
}

TEST(Catalog, SingleEntryRun) {
  ftd::CatalogConfig cfg;
  cfg.entries = {"thm1-case6-q4"};
  const auto res = ftd::run_catalog(cfg);
  EXPECT_TRUE(res.all_pass());
  EXPECT_EQ(res.passed, 1u);
  const auto& rep = res.report;
  EXPECT_EQ(rep["format"], "ftdesign-catalog-report");
  ASSERT_EQ(rep["entries"].size(), 1u);
  const auto& e = rep["entries"][0];
  EXPECT_EQ(e["status"], "pass");
  EXPECT_EQ(e["designs"][0]["params"]["lambda"], 2);
  for (const auto& c : e["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Catalog, UnknownEntryThrows) {
  ftd::CatalogConfig cfg;
  EXPECT_THROW(ftd::run_entry("no-such-entry", cfg), ftd::CatalogError);
}

TEST(Catalog, SchemaIsEmbedded) {
  const auto schema = nlohmann::json::parse(ftd::report_schema());
  EXPECT_EQ(schema["$schema"], "https://json-schema.org/draft/2020-12/schema");
}

}  // namespace
