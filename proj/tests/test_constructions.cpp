#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "trireg/constructions.hpp"

using namespace trireg;
using namespace trireg::testing;

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kDataDir = std::string(TRIREG_SOURCE_DIR) + "/data/named/";

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(*complete(6).regularity_parameters() == Parameters{5, 10});
  CHECK(*complete(2).regularity_parameters() == Parameters{1, 0});
  CHECK(*complete(1).regularity_parameters() == Parameters{0, 0});
  CHECK_THROWS_AS((void)complete(0), Error);
}

TEST_CASE("turan graphs") {
  CHECK(*turan(6, 3).regularity_parameters() == Parameters{4, 4});
  CHECK(*turan(8, 4).regularity_parameters() == Parameters{6, 12});
  CHECK_THROWS_AS((void)turan(7, 3), Error);

  // closed form (q(r-1), C(r-1,2) q^2) for all r >= 3, r | n, n <= 16
  for (int n = 3; n <= 16; ++n) {
    for (int r = 3; r <= n; ++r) {
      if (n % r != 0) continue;
      const int q = n / r;
      const auto p = turan(n, r).regularity_parameters();
      REQUIRE(p.has_value());
      CHECK(p->r2 == q * (r - 1));
      CHECK(p->r3 == (r - 1) * (r - 2) / 2 * q * q);
    }
  }

  // r < 3 is allowed; parameters come straight off the graph
  CHECK(*turan(6, 2).regularity_parameters() == Parameters{3, 0});
  CHECK(*turan(5, 1).regularity_parameters() == Parameters{0, 0});
}

TEST_CASE("named graphs carry their catalogued parameters") {
  const std::pair<NamedId, Parameters> expected[] = {
      {NamedId::G1, {5, 5}}, {NamedId::G2, {6, 8}}, {NamedId::G3, {6, 9}},
      {NamedId::G4, {7, 13}}, {NamedId::G5, {8, 14}},
  };
  for (const auto& [id, params] : expected) {
    const Graph g = named_graph(id);
    CHECK(*g.regularity_parameters() == params);
    CHECK(*brute_parameters(g) == params);
    CHECK(g.is_connected());
    CHECK(named_parameters(id) == params);
  }
  CHECK_THROWS_AS((void)parse_named_id("G7"), Error);
  CHECK(parse_named_id("G3") == NamedId::G3);
}

TEST_CASE("shipped edge-list files are pinned to the embedded tables") {
  const std::pair<const char*, uint64_t> pinned[] = {
      {"g1.txt", 0xaca0ac0e7661de07ull}, {"g2.txt", 0xaa90906f5d20779dull},
      {"g3.txt", 0x443fb2c441a9a3bfull}, {"g4.txt", 0x8dc8c1947d07dcd5ull},
      {"g5.txt", 0x44483ff6c5af232bull},
  };
  for (int i = 0; i < 5; ++i) {
    const std::string body = slurp(kDataDir + pinned[i].first);
    CHECK(fnv1a(body) == pinned[i].second);
    const Graph from_file = load_named_edge_list(kDataDir + pinned[i].first);
    CHECK(from_file == named_graph(static_cast<NamedId>(i)));
  }
}

TEST_CASE("blow-up") {
  CHECK(*blow_up(complete(4)).regularity_parameters() == Parameters{4, 3});
  CHECK(*blow_up(turan(6, 3)).regularity_parameters() == Parameters{5, 4});
  const Graph b = blow_up(complete(2));
  CHECK(*b.regularity_parameters() == Parameters{2, 0});
  CHECK(are_isomorphic(b, cycle(4)));
  CHECK_THROWS_AS((void)blow_up(Graph()), Error);
}

TEST_CASE("recipe evaluation") {
  CHECK(*evaluate(parse_recipe("K5 x K3")).regularity_parameters() == Parameters{6, 7});
  CHECK(*evaluate(parse_recipe("K5 x K3 x K3")).regularity_parameters() == Parameters{8, 8});
  CHECK(*evaluate(parse_recipe("G1")).regularity_parameters() == Parameters{5, 5});
  CHECK_THROWS_AS((void)evaluate(ConstructionRecipe{}), Error);

  // parenthesised products flatten to the same left fold
  CHECK(evaluate(parse_recipe("(K3 x K3) x K2")) == evaluate(parse_recipe("K3 x K3 x K2")));

  CHECK(parse_recipe("T8,4").to_string() == "T8,4");
  CHECK(parse_recipe("K5xK3").atoms.size() == 2);
  CHECK_THROWS_AS((void)parse_recipe(""), Error);
  CHECK_THROWS_AS((void)parse_recipe("K5 x"), Error);
  CHECK_THROWS_AS((void)parse_recipe("Q3"), Error);
  CHECK_THROWS_AS((void)parse_recipe("G6"), Error);
  CHECK_THROWS_AS((void)parse_recipe("K5)"), Error);
}

TEST_CASE("recipe parameter additivity") {
  const ConstructionRecipe r = parse_recipe("K5 x T6,3 x G2");
  Parameters sum{0, 0};
  for (const auto& a : r.atoms) {
    sum.r2 += a.params.r2;
    sum.r3 += a.params.r3;
  }
  CHECK(r.expected_parameters() == sum);
  CHECK(*evaluate(r).regularity_parameters() == sum);
}

TEST_CASE("construct_for") {
  // spec example list; (7,9) is the cell the table prints K5 x K4 for
  const auto r79 = construct_for(7, 9);
  REQUIRE(r79.has_value());
  CHECK(r79->expected_parameters() == Parameters{7, 9});
  CHECK(*evaluate(*r79).regularity_parameters() == Parameters{7, 9});

  const auto r42 = construct_for(4, 2);
  REQUIRE(r42.has_value());
  CHECK(r42->to_string() == "K3 x K3");

  const auto r10 = construct_for(1, 0);
  REQUIRE(r10.has_value());
  CHECK(r10->to_string() == "K2");

  CHECK(construct_for(0, 0)->to_string() == "K1");
  CHECK(construct_for(3, 0)->to_string() == "T6,2");  // K_{3,3}

  CHECK_FALSE(construct_for(3, 2).has_value());
  CHECK_FALSE(construct_for(2, 2).has_value());
  CHECK_FALSE(construct_for(40, 1).has_value());  // beyond the default bound

  // every found recipe evaluates to its pair (sampled range)
  for (int r2 = 0; r2 <= 9; ++r2) {
    for (int r3 = 0; r3 <= r2 * (r2 - 1) / 2; ++r3) {
      const auto recipe = construct_for(r2, r3);
      if (!recipe) continue;
      CHECK(recipe->expected_parameters() == Parameters{r2, r3});
      CHECK(*evaluate(*recipe).regularity_parameters() == Parameters{r2, r3});
    }
  }
}
