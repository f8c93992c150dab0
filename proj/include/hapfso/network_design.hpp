#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hapfso/config_optimizer.hpp"
#include "hapfso/energy_cost.hpp"

namespace hapfso {

struct GroundNode {
  int id = 0;
  double x = 0.0;  // m
  double y = 0.0;  // m

  bool operator==(const GroundNode&) const = default;
};

struct Demand {
  int src = 0;
  int dst = 0;
  double bandwidth = 0.0;  // Gbps

  bool operator==(const Demand&) const = default;
};

/// Ground FSO nodes on a square [0, area_side]^2 and the traffic between
/// them. Node ids are their indices.
struct Scenario {
  std::vector<GroundNode> nodes;
  std::vector<Demand> demands;
  double area_side = 0.0;  // m
  std::uint64_t seed = 0;

  bool operator==(const Scenario&) const = default;
};

struct ScenarioOptions {
  int n_nodes = 480;
  double area_side = 1.0e5;
  double wavelength_capacity = 1.0;  // Gbps
  std::uint64_t seed = 1;
  int demands_per_node = 2;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

struct Cluster {
  Point center;
  std::vector<int> member_ids;
  double radius = 0.0;
};

/// Aggregated traffic between two HAPs (ordered pair).
struct LightpathDemand {
  int src_hap = 0;
  int dst_hap = 0;
  double flow = 0.0;   // Gbps
  int lightpaths = 0;  // ceil(flow / capacity)
};

struct Hap {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double elevation = 0.0;
};

/// Full-duplex inter-HAP link, a < b. Loads count lightpaths per direction.
struct HapLink {
  int a = 0;
  int b = 0;
  double length = 0.0;
  int load_ab = 0;
  int load_ba = 0;

  int wavelengths_used() const { return load_ab > load_ba ? load_ab : load_ba; }
};

struct RoutedLightpath {
  int src_hap = 0;
  int dst_hap = 0;
  std::vector<int> route;  // HAP ids, src first
  int count = 0;
};

struct HapTopology {
  std::vector<Hap> haps;
  std::vector<HapLink> links;
  std::vector<RoutedLightpath> lightpaths;

  std::vector<int> degrees() const;
};

struct RoutingOutcome {
  HapTopology topology;
  std::optional<LightpathDemand> failed;  // first demand that could not be routed

  bool ok() const { return !failed.has_value(); }
};

struct DesignOptions {
  double l_hh = 88000.0;             // max inter-HAP link length, m
  double wavelength_capacity = 1.0;  // Gbps per wavelength
  int v_ceiling = 64;
  double step_deg = 1.0;
};

struct NetworkPlan {
  OptimalConfig config;
  std::vector<Cluster> clusters;
  HapTopology topology;
  CostBreakdown cost;
  int v_used = 0;
};

/// Uniform node positions; each node sends to `demands_per_node` distinct
/// random destinations, magnitudes scaled so that every node's incoming and
/// outgoing totals stay within `wavelength_capacity`. Deterministic in seed.
Scenario generate_scenario(const ScenarioOptions& options);

/// Throws kInvalidArgument on out-of-area nodes, bad ids or over-capacity
/// node traffic.
void validate_scenario(const Scenario& scenario, double wavelength_capacity);

/// Greedy capacity-bounded disk cover. Candidate centres are the uncovered
/// node positions and the centroids of their uncovered radius-neighbourhoods;
/// the candidate covering most uncovered nodes, counted up to w, wins (lowest
/// node id on ties, node position before centroid) and keeps the w nearest.
/// A final pass dissolves clusters whose members all fit, within radius and
/// capacity, into the remaining clusters.
std::vector<Cluster> cluster_nodes(const Scenario& scenario, double radius, int w);

/// Bundles inter-cluster demands into per-HAP-pair lightpath counts, sorted
/// by (src_hap, dst_hap). Intra-cluster traffic is dropped.
std::vector<LightpathDemand> aggregate_demands(const Scenario& scenario,
                                               const std::vector<Cluster>& clusters,
                                               double wavelength_capacity);

/// ceil(flow / capacity) with a 1e-9 guard against rounding noise.
int lightpath_count(double flow, double wavelength_capacity);

/// Incremental topology construction: demands in descending lightpath order,
/// each routed whole on a least-cost path where existing links cost 1e-3 and
/// new links within l_hh cost 1, subject to residual wavelengths and degree v.
RoutingOutcome build_topology(const std::vector<Hap>& haps,
                              const std::vector<LightpathDemand>& demands, double l_hh,
                              int v, int w);

/// Places HAPs at cluster centres at elevation h.
std::vector<Hap> place_haps(const std::vector<Cluster>& clusters, double h);

/// Optimise, cluster, aggregate and route; raise V until every lightpath is
/// routed. Throws kDesignInfeasible once V exceeds the ceiling.
NetworkPlan design_network(const OptimizerInputs& inputs, const Scenario& scenario,
                           const DesignOptions& options = {});

/// Independent re-check of every plan invariant. Returns human-readable
/// violations; empty means the plan is consistent.
std::vector<std::string> validate_plan(const NetworkPlan& plan, const Scenario& scenario,
                                       const OptimizerInputs& inputs,
                                       const DesignOptions& options = {});

}  // namespace hapfso
