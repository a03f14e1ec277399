#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "sif/lattice_path.hpp"
#include "sif/noncrossing.hpp"

using namespace sif;

namespace {

NoncrossingPartition ncp(int n, std::vector<std::vector<int>> blocks) {
  return NoncrossingPartition::from_blocks(n, std::move(blocks));
}

const std::vector<std::vector<int>> twelve_blocks{{1, 7}, {2, 3, 5, 6}, {4},
                                                  {8},    {9, 10, 12},  {11}};

}  // namespace

TEST_CASE("path predicates", "[catalan]") {
  CHECK(LatticePath::parse("UUDD").is_dyck());
  CHECK(LatticePath::parse("UDUD").is_dyck());
  CHECK_FALSE(LatticePath::parse("UDDU").is_nonnegative());
  CHECK(LatticePath::parse("UDDU").is_balanced());
  CHECK(LatticePath::parse("UUDD").is_strict());
  CHECK_FALSE(LatticePath::parse("UDUD").is_strict());
  CHECK(LatticePath::parse("").is_dyck());
  CHECK_THROWS_AS(LatticePath::parse("UXD"), std::invalid_argument);
  CHECK(LatticePath::parse("UUDUDD").text() == "UUDUDD");
}

TEST_CASE("noncrossing predicate", "[catalan]") {
  CHECK(is_noncrossing(12, twelve_blocks));
  CHECK_FALSE(is_noncrossing(4, {{1, 3}, {2, 4}}));
  CHECK(is_noncrossing(3, {{1}, {2}, {3}}));
  CHECK_THROWS_AS(is_noncrossing(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(is_noncrossing(2, {{1, 1}, {2}}), std::invalid_argument);
}

TEST_CASE("noncrossing predicate agrees with the crossing-quadruple definition", "[catalan]") {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t noncrossing_count = 0;
    sif_test::for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
      // Definitional check: some a<b<c<d with a,c and b,d in different blocks.
      std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
      for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int e : blocks[b]) owner[static_cast<std::size_t>(e)] = static_cast<int>(b);
      bool crossing = false;
      for (int a = 1; a <= n && !crossing; ++a)
        for (int b = a + 1; b <= n && !crossing; ++b)
          for (int c = b + 1; c <= n && !crossing; ++c)
            for (int d = c + 1; d <= n && !crossing; ++d)
              if (owner[static_cast<std::size_t>(a)] == owner[static_cast<std::size_t>(c)] &&
                  owner[static_cast<std::size_t>(b)] == owner[static_cast<std::size_t>(d)] &&
                  owner[static_cast<std::size_t>(a)] != owner[static_cast<std::size_t>(b)])
                crossing = true;
      REQUIRE(is_noncrossing(n, blocks) == !crossing);
      noncrossing_count += !crossing;
    });
    REQUIRE(noncrossing_count == sif_test::catalan(n));
  }
}

TEST_CASE("partition to path", "[catalan]") {
  CHECK(partition_to_path(ncp(12, twelve_blocks)) ==
        LatticePath::parse("UUUUDUUDDDDUDDUDUUUDUDDD"));
  CHECK(partition_to_path(ncp(1, {{1}})) == LatticePath::parse("UD"));
  CHECK(partition_to_path(ncp(7, {{2}, {4}, {1, 3, 5}, {6, 7}})) ==
        LatticePath::parse("UUDUUDUDDDUUDD"));
}

TEST_CASE("path to partition", "[catalan]") {
  CHECK(path_to_partition(LatticePath::parse("UUDUUDUDDDUUDD")) ==
        ncp(7, {{2}, {4}, {1, 3, 5}, {6, 7}}));
  CHECK(path_to_partition(LatticePath::parse("UD")) == ncp(1, {{1}}));
  CHECK(path_to_partition(LatticePath::parse("UUUDUDDD")) == ncp(4, {{3}, {1, 2, 4}}));
  CHECK_THROWS_AS(path_to_partition(LatticePath::parse("UDD")), std::invalid_argument);
}

TEST_CASE("partition/path correspondence is a bijection preserving structure", "[catalan]") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> seen;
    std::uint64_t count = 0;
    sif_test::for_each_dyck_path(n, [&](const LatticePath& path) {
      ++count;
      const NoncrossingPartition partition = path_to_partition(path);
      REQUIRE(partition.ground_size() == n);
      REQUIRE(partition_to_path(partition) == path);
      REQUIRE(component_count(partition) ==
              static_cast<int>(path_components(path).size()));
      // Descent i has the length of the block with i-th smallest maximum.
      const auto by_max = partition.blocks_by_max();
      std::vector<int> descent_lengths;
      int run = 0;
      for (Step s : path.steps()) {
        if (s == Step::down) {
          ++run;
        } else if (run > 0) {
          descent_lengths.push_back(run);
          run = 0;
        }
      }
      if (run > 0) descent_lengths.push_back(run);
      REQUIRE(descent_lengths.size() == by_max.size());
      for (std::size_t i = 0; i < by_max.size(); ++i)
        REQUIRE(static_cast<std::size_t>(descent_lengths[i]) == by_max[i].size());
      std::string key;
      for (const auto& block : partition.blocks()) {
        for (int e : block) key += std::to_string(e) + ",";
        key += "|";
      }
      seen.insert(key);
    });
    REQUIRE(count == sif_test::catalan(n));
    REQUIRE(seen.size() == count);
  }
}

TEST_CASE("Dyck path counts are the Catalan numbers", "[catalan]") {
  for (int n = 0; n <= 10; ++n) {
    std::uint64_t count = 0;
    sif_test::for_each_dyck_path(n, [&](const LatticePath& path) {
      ++count;
      REQUIRE(path.length() == 2 * n);
    });
    REQUIRE(count == sif_test::catalan(n));
  }
}

TEST_CASE("matching upsteps", "[catalan]") {
  CHECK(matching_upstep(LatticePath::parse("UUDD"), 3) == 2);
  CHECK(matching_upstep(LatticePath::parse("UUDD"), 4) == 1);
  CHECK(matching_upstep(LatticePath::parse("UDUD"), 4) == 3);
  CHECK_THROWS_AS(matching_upstep(LatticePath::parse("UUDD"), 1), std::invalid_argument);
  CHECK_THROWS_AS(matching_upstep(LatticePath::parse("DU"), 1), std::invalid_argument);
}

TEST_CASE("matched pairs are distinct and nest", "[catalan]") {
  for (int n = 1; n <= 7; ++n) {
    sif_test::for_each_dyck_path(n, [&](const LatticePath& path) {
      std::vector<std::pair<int, int>> pairs;  // (upstep, downstep)
      std::set<int> used;
      for (int i = 1; i <= path.length(); ++i) {
        if (path.step(i) != Step::down) continue;
        const int u = matching_upstep(path, i);
        REQUIRE(path.step(u) == Step::up);
        REQUIRE(used.insert(u).second);  // distinct downsteps -> distinct upsteps
        pairs.emplace_back(u, i);
      }
      for (const auto& [u1, d1] : pairs)
        for (const auto& [u2, d2] : pairs) {
          if (u1 == u2) continue;
          const bool disjoint = d1 < u2 || d2 < u1;
          const bool nested = (u1 < u2 && d2 < d1) || (u2 < u1 && d1 < d2);
          REQUIRE((disjoint || nested));
        }
    });
  }
}

TEST_CASE("path components", "[catalan]") {
  const auto comps = path_components(LatticePath::parse("UUDUUDUDDDUUDD"));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == LatticePath::parse("UUDUUDUDDD"));
  CHECK(comps[1] == LatticePath::parse("UUDD"));
  for (const auto& c : comps) CHECK(c.is_strict());

  const auto sawtooth = path_components(LatticePath::parse("UDUD"));
  REQUIRE(sawtooth.size() == 2);
  CHECK(sawtooth[0] == LatticePath::parse("UD"));

  const auto strict = path_components(LatticePath::parse("UUDD"));
  REQUIRE(strict.size() == 1);
  CHECK(strict[0] == LatticePath::parse("UUDD"));

  CHECK_THROWS_AS(path_components(LatticePath::parse("UDD")), std::invalid_argument);
}

TEST_CASE("murasaki rendering", "[catalan]") {
  CHECK(murasaki_render(ncp(3, {{1}, {2}, {3}})) == "| | |\n1 2 3\n");
  CHECK(murasaki_render(ncp(2, {{1, 2}})) == "+-+\n1 2\n");

  const std::string twelve = murasaki_render(ncp(12, twelve_blocks));
  // Three nesting tiers plus the label row.
  CHECK(std::count(twelve.begin(), twelve.end(), '\n') == 4);
  CHECK(component_count(ncp(12, twelve_blocks)) == 3);
  // Tips: one '+' per element of each joined block.
  CHECK(std::count(twelve.begin(), twelve.end(), '+') == 2 + 4 + 3);
  CHECK(twelve ==
        "+-----------------+\n"
        "|  +--+-----+--+  |     +--+-----+\n"
        "|  |  |  |  |  |  |  |  |  |  |  |\n"
        "1  2  3  4  5  6  7  8  9  10 11 12\n");
}
