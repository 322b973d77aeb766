// Copyright 2026 The graphbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "graphbell/catalog.h"

#include <set>

#include "gtest/gtest.h"

#include "graphbell/errors.h"

using namespace graphbell;

TEST(catalog, entries) {
    const auto &c = catalog();
    ASSERT_EQ(c.size(), 18u);
    for (size_t i = 0; i < c.size(); i++) {
        ASSERT_EQ(c[i].number, static_cast<int>(i) + 2);
        ASSERT_EQ(c[i].name, "no" + std::to_string(i + 2));
        ASSERT_TRUE(c[i].graph.is_connected()) << c[i].name;
        ASSERT_EQ(c[i].printed_generators.size(), c[i].graph.n);
    }
    ASSERT_EQ(catalog_entry("ghz3").name, "no2");
    ASSERT_EQ(catalog_entry("no18").alias, "rc6");
    ASSERT_EQ(catalog_entry("no10").display_name(), "no10");
    ASSERT_EQ(catalog_entry("no8").display_name(), "rc5");
    ASSERT_THROW(catalog_entry("no1"), InvalidInput);
    ASSERT_THROW(catalog_lookup("petersen"), InvalidInput);
}

TEST(catalog, edge_counts) {
    ASSERT_EQ(catalog_lookup("rc6").edges.size(), 6u);
    ASSERT_EQ(catalog_lookup("no19").edges.size(), 9u);
    ASSERT_EQ(catalog_lookup("ghz6").edges.size(), 5u);
    ASSERT_EQ(catalog_lookup("e6").neighbor_mask(3), 0b101010u);
}

TEST(catalog, distinct_graphs) {
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const auto &e : catalog()) {
        ASSERT_TRUE(seen.insert(e.graph.edges).second) << e.name;
    }
}

TEST(catalog, printed_generator_discrepancies) {
    std::set<std::pair<std::string, int>> found;
    for (const auto &d : validate_catalog()) {
        ASSERT_NE(d.derived, d.printed);
        found.insert({d.graph, d.generator});
    }
    std::set<std::pair<std::string, int>> expected{{"y5", 2}, {"h6", 5}, {"h6", 6}, {"no17", 1}};
    ASSERT_EQ(found, expected);
    ASSERT_TRUE(validate_entry(catalog_entry("no19")).empty());
}
