#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "hapfso/error.hpp"
#include "hapfso/network_design.hpp"

using namespace hapfso;

namespace {

ErrorCode code_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kConfig;
}

Scenario make(int n, std::uint64_t seed, int fan_out = 2) {
  ScenarioOptions o;
  o.n_nodes = n;
  o.seed = seed;
  o.demands_per_node = fan_out;
  return generate_scenario(o);
}

std::vector<Hap> line_of_haps(std::initializer_list<double> xs) {
  std::vector<Hap> haps;
  for (double x : xs) haps.push_back(Hap{static_cast<int>(haps.size()), x, 0.0, 20000.0});
  return haps;
}

}  // namespace

TEST_CASE("scenario generation") {
  const Scenario a = make(480, 9);
  CHECK(a == make(480, 9));
  CHECK(a.nodes != make(480, 10).nodes);
  CHECK(a.nodes.size() == 480);
  CHECK_NOTHROW(validate_scenario(a, 1.0));
  std::vector<double> out(480, 0.0), in(480, 0.0);
  std::set<std::pair<int, int>> pairs;
  for (const Demand& d : a.demands) {
    CHECK(d.src != d.dst);
    CHECK(d.bandwidth > 0.0);
    CHECK(pairs.insert({d.src, d.dst}).second);
    out[d.src] += d.bandwidth;
    in[d.dst] += d.bandwidth;
  }
  for (int i = 0; i < 480; ++i) {
    CHECK(out[i] <= 1.0 + 1e-12);
    CHECK(in[i] <= 1.0 + 1e-12);
    CHECK(a.nodes[i].x >= 0.0);
    CHECK(a.nodes[i].x <= 1e5);
  }
  CHECK(a.demands.size() == 960);
  CHECK(make(10, 1, 0).demands.empty());
  CHECK(code_of([] { make(1, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("scenario validation rejects bad input") {
  Scenario s = make(20, 2);
  s.nodes[3].x = -1.0;
  CHECK(code_of([&] { validate_scenario(s, 1.0); }) == ErrorCode::kInvalidArgument);
  s = make(20, 2);
  s.demands.push_back({0, 0, 0.1});
  CHECK(code_of([&] { validate_scenario(s, 1.0); }) == ErrorCode::kInvalidArgument);
  s = make(20, 2);
  s.demands.push_back({0, 1, 5.0});
  CHECK(code_of([&] { validate_scenario(s, 1.0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("clustering small cases") {
  Scenario s;
  s.area_side = 1e5;
  for (int i = 0; i < 10; ++i) s.nodes.push_back({i, 50000.0 + 100.0 * i, 50000.0});
  CHECK(cluster_nodes(s, 5000.0, 40).size() == 1);

  Scenario same;
  same.area_side = 1e5;
  for (int i = 0; i < 41; ++i) same.nodes.push_back({i, 1000.0, 1000.0});
  const auto two = cluster_nodes(same, 5000.0, 40);
  REQUIRE(two.size() == 2);
  CHECK(two[0].member_ids.size() + two[1].member_ids.size() == 41);
  CHECK(code_of([&] { cluster_nodes(same, 0.0, 40); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("clustering invariants on uniform scenarios") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Scenario s = make(480, seed);
    const auto clusters = cluster_nodes(s, 11929.0, 40);
    CHECK(clusters.size() >= 12);
    CHECK(clusters.size() <= 54);
    std::vector<int> seen(480, 0);
    for (const Cluster& c : clusters) {
      CHECK(c.member_ids.size() <= 40);
      CHECK_FALSE(c.member_ids.empty());
      for (int id : c.member_ids) {
        ++seen[id];
        CHECK(std::hypot(s.nodes[id].x - c.center.x, s.nodes[id].y - c.center.y) <= 11929.0);
      }
    }
    for (int count : seen) CHECK(count == 1);
    const auto again = cluster_nodes(s, 11929.0, 40);
    REQUIRE(again.size() == clusters.size());
    for (std::size_t i = 0; i < again.size(); ++i) {
      CHECK(again[i].center == clusters[i].center);
      CHECK(again[i].member_ids == clusters[i].member_ids);
    }
  }
}

TEST_CASE("demand aggregation") {
  CHECK(lightpath_count(2.5, 1.0) == 3);
  CHECK(lightpath_count(2.0 + 1e-12, 1.0) == 2);
  CHECK(lightpath_count(0.0, 1.0) == 0);
  CHECK(lightpath_count(0.01, 1.0) == 1);

  Scenario s;
  s.area_side = 1e5;
  s.nodes = {{0, 0.0, 0.0}, {1, 10.0, 0.0}, {2, 90000.0, 0.0}, {3, 90010.0, 0.0}};
  s.demands = {{0, 1, 0.5}, {2, 3, 0.5}};
  std::vector<Cluster> clusters{{{0.0, 0.0}, {0, 1}, 100.0}, {{90000.0, 0.0}, {2, 3}, 100.0}};
  CHECK(aggregate_demands(s, clusters, 1.0).empty());

  s.demands = {{0, 2, 0.7}, {1, 3, 0.8}, {3, 0, 1.0}, {2, 1, 1.0}};
  const auto agg = aggregate_demands(s, clusters, 1.0);
  REQUIRE(agg.size() == 2);
  CHECK(agg[0].src_hap == 0);
  CHECK(agg[0].dst_hap == 1);
  CHECK(agg[0].flow == doctest::Approx(1.5));
  CHECK(agg[0].lightpaths == 2);
  CHECK(agg[1].lightpaths == 2);

  const Scenario big = make(600, 4);
  const auto cl = cluster_nodes(big, 11929.0, 40);
  double flow = 0.0;
  int paths = 0;
  for (const auto& d : aggregate_demands(big, cl, 1.0)) {
    flow += d.flow;
    paths += d.lightpaths;
  }
  CHECK(paths >= flow);
}

TEST_CASE("routing: direct link within reach") {
  const auto haps = line_of_haps({0.0, 50000.0});
  const auto out = build_topology(haps, {{0, 1, 0.5, 1}}, 88000.0, 10, 40);
  REQUIRE(out.ok());
  REQUIRE(out.topology.links.size() == 1);
  CHECK(out.topology.links[0].length == doctest::Approx(50000.0));
  CHECK(out.topology.links[0].load_ab == 1);
  CHECK(out.topology.links[0].load_ba == 0);
  CHECK(out.topology.lightpaths[0].route == std::vector<int>{0, 1});
}

TEST_CASE("routing: relay beyond L_HH") {
  const auto haps = line_of_haps({0.0, 100000.0, 50000.0});
  const auto out = build_topology(haps, {{0, 1, 0.5, 1}}, 88000.0, 10, 40);
  REQUIRE(out.ok());
  CHECK(out.topology.links.size() == 2);
  CHECK(out.topology.lightpaths[0].route == std::vector<int>{0, 2, 1});
  const auto none = build_topology(line_of_haps({0.0, 100000.0}), {{0, 1, 0.5, 1}}, 88000.0, 10, 40);
  REQUIRE_FALSE(none.ok());
  CHECK(none.failed->src_hap == 0);
}

TEST_CASE("routing prefers existing links") {
  // Triangle, all pairs in reach.
  std::vector<Hap> haps{{0, 0.0, 0.0, 2e4}, {1, 40000.0, 0.0, 2e4}, {2, 20000.0, 30000.0, 2e4}};
  const auto out =
      build_topology(haps, {{0, 1, 1.0, 2}, {1, 2, 1.0, 2}, {0, 2, 0.5, 1}}, 88000.0, 10, 40);
  REQUIRE(out.ok());
  CHECK(out.topology.links.size() == 2);
  CHECK(out.topology.lightpaths[2].route == std::vector<int>{0, 1, 2});
}

TEST_CASE("routing respects degree at relays and endpoints") {
  const auto haps = line_of_haps({0.0, 60000.0, 120000.0});
  // The relay would need two new links.
  CHECK_FALSE(build_topology(haps, {{0, 2, 0.5, 1}}, 88000.0, 1, 40).ok());
  CHECK(build_topology(haps, {{0, 2, 0.5, 1}}, 88000.0, 2, 40).ok());
  // Star: HAP 0 cannot open a second link at V = 1.
  std::vector<Hap> star{{0, 0.0, 0.0, 2e4}, {1, 30000.0, 0.0, 2e4}, {2, -30000.0, 0.0, 2e4}};
  const auto out = build_topology(star, {{0, 1, 1.0, 1}, {0, 2, 0.9, 1}}, 88000.0, 1, 40);
  CHECK_FALSE(out.ok());
  CHECK(out.topology.links.size() == 1);
}

TEST_CASE("routing respects wavelength capacity") {
  std::vector<Hap> haps{{0, 0.0, 0.0, 2e4}, {1, 40000.0, 0.0, 2e4}, {2, 20000.0, 30000.0, 2e4}};
  CHECK_FALSE(build_topology(haps, {{0, 1, 5.0, 5}}, 88000.0, 10, 4).ok());
  const auto out = build_topology(haps, {{0, 1, 3.0, 3}, {0, 1, 3.0, 3}}, 88000.0, 10, 4);
  REQUIRE(out.ok());
  CHECK(out.topology.lightpaths[1].route.size() == 3);
  for (const HapLink& l : out.topology.links) CHECK(l.wavelengths_used() <= 4);
  // Opposite directions do not share wavelengths.
  const auto duplex = build_topology(haps, {{0, 1, 4.0, 4}, {1, 0, 4.0, 4}}, 88000.0, 10, 4);
  REQUIRE(duplex.ok());
  CHECK(duplex.topology.links.size() == 1);
}

TEST_CASE("design pipeline invariants") {
  OptimizerInputs in;
  for (int n : {400, 1200}) {
    for (double kwh : {42.0, 50.0}) {
      for (int w : {40, 80}) {
        const Scenario s = make(n, 100 + n);
        in.energy.e_solar = kwh * 1000.0;
        in.w = w;
        const NetworkPlan plan = design_network(in, s);
        const auto issues = validate_plan(plan, s, in);
        for (const auto& issue : issues) INFO(issue);
        CHECK(issues.empty());
        CHECK(plan.cost == network_cost(in.cost, static_cast<int>(plan.clusters.size()),
                                        plan.config.cfg.m,
                                        static_cast<int>(plan.topology.links.size())));
        CHECK(plan.v_used >= in.v_max);
        const NetworkPlan again = design_network(in, s);
        CHECK(again.cost == plan.cost);
        CHECK(again.topology.links.size() == plan.topology.links.size());
      }
    }
  }
}

TEST_CASE("design without demands") {
  Scenario s = make(300, 5, 0);
  OptimizerInputs in;
  const NetworkPlan plan = design_network(in, s);
  CHECK(plan.topology.links.empty());
  const int k = static_cast<int>(plan.clusters.size());
  const int m = plan.config.cfg.m;
  CHECK(plan.cost.total == doctest::Approx(k * (100.0 + (m + 1) * 10.0 + 1000.0 / 365.0)));
  CHECK(validate_plan(plan, s, in).empty());
}

TEST_CASE("validator catches tampering") {
  const Scenario s = make(500, 6);
  OptimizerInputs in;
  const NetworkPlan plan = design_network(in, s);
  REQUIRE(validate_plan(plan, s, in).empty());
  REQUIRE_FALSE(plan.topology.links.empty());

  NetworkPlan bad = plan;
  bad.topology.links[0].load_ab += 1;
  CHECK_FALSE(validate_plan(bad, s, in).empty());
  bad = plan;
  bad.topology.lightpaths.pop_back();
  CHECK_FALSE(validate_plan(bad, s, in).empty());
  bad = plan;
  bad.cost.total += 1.0;
  CHECK_FALSE(validate_plan(bad, s, in).empty());
  bad = plan;
  bad.clusters[0].center.x += 30000.0;
  CHECK_FALSE(validate_plan(bad, s, in).empty());
  bad = plan;
  bad.v_used = 0;
  CHECK_FALSE(validate_plan(bad, s, in).empty());
  DesignOptions tight;
  tight.l_hh = 1000.0;
  CHECK_FALSE(validate_plan(plan, s, in, tight).empty());
}

TEST_CASE("design infeasible at the V ceiling") {
  const Scenario s = make(400, 8);
  OptimizerInputs in;
  DesignOptions o;
  o.l_hh = 1.0;
  o.v_ceiling = 11;
  CHECK(code_of([&] { design_network(in, s, o); }) == ErrorCode::kDesignInfeasible);
  // Raising V past the solar budget ends the loop too.
  in.energy.e_solar = 42000.0;
  o.v_ceiling = 64;
  CHECK(code_of([&] { design_network(in, s, o); }) == ErrorCode::kDesignInfeasible);
}
