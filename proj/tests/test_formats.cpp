#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sif/text.hpp"

using namespace sif;

namespace {

Permutation perm(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }

const char* const sixteen_list_text = "2,3,1/2,1/e/1/3,1,2/e/2,1/e/1/e/e/e/1/e/e/2,1";

}  // namespace

TEST_CASE("one-line text form", "[formats]") {
  CHECK(to_one_line(perm({6, 1, 5, 3, 4, 2})) == "6 1 5 3 4 2");
  CHECK(parse_one_line("6 1 5 3 4 2") == perm({6, 1, 5, 3, 4, 2}));
  CHECK(parse_one_line("") == perm({}));
  CHECK(to_one_line(perm({})) == "");
  CHECK_THROWS_AS(parse_one_line("1 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_one_line("a b"), std::invalid_argument);
}

TEST_CASE("cycle text form", "[formats]") {
  CHECK(to_cycles_string(perm({6, 1, 5, 3, 4, 2})) == "(1 6 2)(3 5 4)");
  CHECK(to_cycles_string(Permutation::identity(2)) == "(1)(2)");
}

TEST_CASE("labeled permutation text form", "[formats]") {
  const LabeledPermutation lp =
      LabeledPermutation::from_support_images({2, 3, 5, 9}, {5, 9, 2, 3});
  CHECK(to_text(lp) == "support:2,3,5,9 images:5,9,2,3");
  CHECK(parse_labeled("support:2,3,5,9 images:5,9,2,3") == lp);
  CHECK_THROWS_AS(parse_labeled("support:2,3 images:3"), std::invalid_argument);
}

TEST_CASE("partition and path text forms", "[formats]") {
  const auto ncp = NoncrossingPartition::from_blocks(
      12, {{1, 7}, {2, 3, 5, 6}, {4}, {8}, {9, 10, 12}, {11}});
  CHECK(to_text(ncp) == "1,7|2,3,5,6|4|8|9,10,12|11");
  CHECK(parse_partition("1,7|2,3,5,6|4|8|9,10,12|11") == ncp);
  CHECK(LatticePath::parse("UUDUDD").text() == "UUDUDD");
}

TEST_CASE("family text form", "[formats]") {
  const SifFamily family = split(perm({7, 5, 6, 4, 2, 3, 1, 8, 10, 12, 11, 9}));
  const std::string text = "1,7:21;2,3,5,6:3412;4:1;8:1;9,10,12:231;11:1";
  CHECK(to_text(family) == text);
  CHECK(parse_family(text) == family);
  CHECK(parse_family("") == SifFamily{});
  CHECK_THROWS_AS(parse_family("1,2:12"), std::invalid_argument);  // 1 2 not SIF
}

TEST_CASE("family text survives patterns longer than nine", "[formats]") {
  // A cycle of length 12 is SIF; its pattern text must stay parseable.
  std::vector<int> rotation(12);
  for (int i = 0; i < 12; ++i) rotation[static_cast<std::size_t>(i)] = (i + 1) % 12 + 1;
  const SifFamily family = split(perm(rotation));
  REQUIRE(family.piece_count() == 1);
  CHECK(parse_family(to_text(family)) == family);
  CHECK(to_text(family).find(',') != std::string::npos);
}

TEST_CASE("sif list text form", "[formats]") {
  const Permutation sixteen =
      perm({2, 4, 3, 1, 8, 7, 6, 5, 13, 10, 9, 16, 11, 15, 14, 12});
  CHECK(to_text(encode(sixteen)) == sixteen_list_text);
  CHECK(parse_sif_list(sixteen_list_text) == encode(sixteen));
  CHECK(to_text(encode(perm({1}))) == "e");
  CHECK_THROWS_AS(parse_sif_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_sif_list("1,2"), std::invalid_argument);
}

TEST_CASE("text round trips on random data", "[formats]") {
  std::mt19937 rng(424242);
  for (int round = 0; round < 2000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Permutation p = sif_test::random_permutation(n, rng);
    REQUIRE(parse_one_line(to_one_line(p)) == p);
    const SifFamily family = split(p);
    REQUIRE(parse_family(to_text(family)) == family);
    const SifList list = encode(p);
    REQUIRE(parse_sif_list(to_text(list)) == list);
  }
}

TEST_CASE("json forms carry the same information as text", "[formats]") {
  const Permutation twelve = perm({7, 5, 6, 4, 2, 3, 1, 8, 10, 12, 11, 9});
  const SifFamily family = split(twelve);
  const nlohmann::json jf = to_json(family);
  REQUIRE(jf.is_array());
  CHECK(jf.size() == 6);
  CHECK(jf[0]["support"] == nlohmann::json({1, 7}));
  CHECK(jf[0]["pattern"] == nlohmann::json({2, 1}));
  CHECK(family_from_json(jf) == family);

  const SifList list = encode(twelve);
  const nlohmann::json jl = to_json(list);
  CHECK(jl["n"] == 12);
  REQUIRE(jl["items"].is_array());
  CHECK(jl["items"].size() == 12);
  CHECK(sif_list_from_json(jl) == list);

  std::mt19937 rng(5);
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Permutation p = sif_test::random_permutation(n, rng);
    REQUIRE(family_from_json(to_json(split(p))) == split(p));
    REQUIRE(sif_list_from_json(to_json(encode(p))) == encode(p));
  }
}
