#include <algorithm>
#include <set>

#include "bcnfoc/errors.hpp"
#include "bcnfoc/graph.hpp"
#include "bcnfoc/random_instance.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bcnfoc;

namespace {

std::set<StateIndex> as_set(const std::vector<StateIndex>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("one-step reachability, unconstrained") {
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  const Constraints none = Constraints::unconstrained(m.input_count());
  CHECK(one_step_reachable(m, 1, none) == std::vector<StateIndex>{8, 7, 4, 3});
  for (StateIndex i = 1; i <= 8; ++i) {
    std::set<StateIndex> expected;
    for (InputIndex k = 1; k <= 4; ++k) expected.insert(m.step(i, k));
    CHECK(as_set(one_step_reachable(m, i, none)) == expected);
  }
}

TEST_CASE("one-step reachability under constraints") {
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  const Constraints c = parse_constraints(testing::kThreeGeneConstraints, m);
  std::set<StateIndex> from6;
  for (InputIndex k : {3, 4}) {
    if (m.step(6, k) != 8) from6.insert(m.step(6, k));
  }
  CHECK(as_set(one_step_reachable(m, 6, c)) == from6);
  CHECK(as_set(one_step_reachable(m, 1, c)) == std::set<StateIndex>{3, 4});  // 8 forbidden, u2 not allowed
  CHECK_THROWS_AS(one_step_reachable(m, 8, c), Error);

  Constraints dead = c;
  dead.per_state_inputs[2] = {};
  CHECK(one_step_reachable(m, 2, dead).empty());
}

TEST_CASE("admissible controls") {
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  const Constraints c = parse_constraints(testing::kThreeGeneConstraints, m);
  CHECK(admissible_controls(m, 3, 7, c) == std::vector<InputIndex>{1, 3});
  CHECK(admissible_controls(m, 1, 2, c).empty());

  const Constraints none = Constraints::unconstrained(m.input_count());
  for (StateIndex i = 1; i <= 8; ++i) {
    std::size_t total = 0;
    for (StateIndex j = 1; j <= 8; ++j) total += admissible_controls(m, i, j, none).size();
    CHECK(total == 4);
  }
}

TEST_CASE("state transition graph of the constrained example") {
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  const Constraints c = parse_constraints(testing::kThreeGeneConstraints, m);
  const Stg g = build_stg(m, 1, c);
  CHECK(g.x0() == 1);
  CHECK(g.vertices().size() == 7);
  CHECK(g.vertices().front() == 1);
  CHECK(!g.contains(8));
  for (StateIndex i : g.vertices()) {
    for (const StgEdge& e : g.successors(i)) {
      CHECK(!e.controls.empty());
      CHECK(e.target != 8);
      CHECK(e.controls == admissible_controls(m, i, e.target, c));
    }
  }
  const Stg again = build_stg(m, 1, c);
  CHECK(again.vertices() == g.vertices());
  CHECK(again.edge_count() == g.edge_count());
  CHECK_THROWS_AS(build_stg(m, 8, c), Error);
}

TEST_CASE("arabinose operon reachable set") {
  const NetworkModel m = testing::load_model("ara/network.bcn");
  const Stg g = build_stg(m, 9, Constraints::unconstrained(m.input_count()));
  CHECK(g.vertices().size() == 108);
}

TEST_CASE("a state without admissible inputs is isolated") {
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  Constraints c = Constraints::unconstrained(4);
  c.per_state_inputs[5] = {};
  const Stg g = build_stg(m, 5, c);
  CHECK(g.vertices() == std::vector<StateIndex>{5});
  CHECK(g.edge_count() == 0);
}

TEST_CASE("reach layers") {
  const NetworkModel m = testing::load_model("three_gene/network.bcn");
  const Constraints c = parse_constraints(testing::kThreeGeneConstraints, m);
  CHECK(reach_layers(m, 1, c, 0).layers == std::vector<std::vector<StateIndex>>{{1}});
  const ReachLayers r = reach_layers(m, 1, c, 4);
  REQUIRE(r.layers.size() == 5);
  const auto last = as_set(r.layers[4]);
  CHECK(last.contains(2));
  CHECK(last.contains(6));
  for (std::size_t d = 0; d < 4; ++d) {
    std::set<StateIndex> next;
    for (StateIndex i : r.layers[d]) {
      for (StateIndex j : one_step_reachable(m, i, c)) next.insert(j);
    }
    CHECK(as_set(r.layers[d + 1]) == next);
  }
}

TEST_CASE("layer union equals the BFS vertex set") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const RandomInstance inst = random_instance(seed);
    const NetworkModel m = parse_network(inst.network_text);
    const ProblemSpec p = parse_problem(inst.problem_text, m);
    const Stg g = build_stg(m, p.x0, p.constraints);
    const ReachLayers r = reach_layers(m, p.x0, p.constraints, m.state_count() - 1);
    std::set<StateIndex> all;
    for (const auto& layer : r.layers) all.insert(layer.begin(), layer.end());
    CHECK(all == as_set(g.vertices()));
    CHECK(g.vertices().size() <= m.state_count());
    for (StateIndex f : p.constraints.forbidden_states) CHECK(!g.contains(f));
  }
}
