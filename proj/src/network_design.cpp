#include "hapfso/network_design.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "hapfso/error.hpp"

namespace hapfso {

namespace {

constexpr double kExistingLinkCost = 1e-3;
constexpr double kNewLinkCost = 1.0;

// mt19937_64 is bit-exact across standard libraries; the distributions are
// not, so the conversions live here.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::mt19937_64 engine_;
};

double distance(double ax, double ay, double bx, double by) {
  return std::hypot(ax - bx, ay - by);
}

// Bucket grid over the ground square for radius queries.
class NodeGrid {
 public:
  NodeGrid(const std::vector<GroundNode>& nodes, double cell)
      : nodes_(nodes), cell_(cell) {
    double max_x = 0.0;
    double max_y = 0.0;
    for (const GroundNode& n : nodes) {
      max_x = std::max(max_x, n.x);
      max_y = std::max(max_y, n.y);
    }
    nx_ = static_cast<int>(max_x / cell_) + 1;
    ny_ = static_cast<int>(max_y / cell_) + 1;
    cells_.resize(static_cast<std::size_t>(nx_) * ny_);
    for (const GroundNode& n : nodes) cells_[index(cell_of(n.x), cell_of(n.y))].push_back(n.id);
  }

  void remove(int id) {
    auto& bucket = cells_[index(cell_of(nodes_[id].x), cell_of(nodes_[id].y))];
    bucket.erase(std::find(bucket.begin(), bucket.end(), id));
  }

  // Ids within `radius` of p (inclusive), in ascending id order.
  std::vector<int> query(Point p, double radius) const {
    std::vector<int> out;
    const int span = static_cast<int>(std::ceil(radius / cell_));
    const int cx = cell_of(p.x);
    const int cy = cell_of(p.y);
    const double r2 = radius * radius;
    for (int ix = std::max(0, cx - span); ix <= std::min(nx_ - 1, cx + span); ++ix) {
      for (int iy = std::max(0, cy - span); iy <= std::min(ny_ - 1, cy + span); ++iy) {
        for (int id : cells_[index(ix, iy)]) {
          const double dx = nodes_[id].x - p.x;
          const double dy = nodes_[id].y - p.y;
          if (dx * dx + dy * dy <= r2) out.push_back(id);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int cell_of(double v) const {
    return std::clamp(static_cast<int>(std::floor(v / cell_)), 0,
                      std::max(nx_, ny_) - 1);
  }
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(std::clamp(ix, 0, nx_ - 1)) * ny_ +
           static_cast<std::size_t>(std::clamp(iy, 0, ny_ - 1));
  }

  const std::vector<GroundNode>& nodes_;
  double cell_;
  int nx_ = 1;
  int ny_ = 1;
  std::vector<std::vector<int>> cells_;
};

Point centroid(const std::vector<GroundNode>& nodes, const std::vector<int>& ids) {
  Point c;
  for (int id : ids) {
    c.x += nodes[id].x;
    c.y += nodes[id].y;
  }
  c.x /= static_cast<double>(ids.size());
  c.y /= static_cast<double>(ids.size());
  return c;
}

// Removes cycles from a walk, keeping the first arrival at each node.
std::vector<int> simplify_walk(const std::vector<int>& walk) {
  std::vector<int> path;
  for (int node : walk) {
    auto it = std::find(path.begin(), path.end(), node);
    if (it != path.end()) {
      path.erase(it + 1, path.end());
    } else {
      path.push_back(node);
    }
  }
  return path;
}

// Empties a cluster whenever every member fits into another cluster that
// still has spare capacity and whose disk already contains it. Smallest
// clusters are tried first; repeats until nothing changes.
void dissolve_redundant_clusters(const std::vector<GroundNode>& nodes,
                                 std::vector<Cluster>& clusters, double radius, int w) {
  const std::size_t k = clusters.size();
  std::vector<char> alive(k, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < k; ++c) {
      if (alive[c]) order.push_back(c);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return clusters[a].member_ids.size() < clusters[b].member_ids.size();
    });
    for (std::size_t c : order) {
      // Candidate hosts per member; members with fewer options go first.
      std::vector<std::pair<int, std::vector<std::size_t>>> options;
      for (int id : clusters[c].member_ids) {
        std::vector<std::size_t> hosts;
        for (std::size_t o = 0; o < k; ++o) {
          if (o == c || !alive[o]) continue;
          if (static_cast<int>(clusters[o].member_ids.size()) >= w) continue;
          if (distance(nodes[id].x, nodes[id].y, clusters[o].center.x,
                       clusters[o].center.y) <= radius) {
            hosts.push_back(o);
          }
        }
        if (hosts.empty()) break;
        options.emplace_back(id, std::move(hosts));
      }
      if (options.size() != clusters[c].member_ids.size()) continue;
      std::stable_sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
        return a.second.size() < b.second.size();
      });
      std::vector<int> extra(k, 0);
      std::vector<std::pair<int, std::size_t>> moves;
      for (const auto& [id, hosts] : options) {
        std::size_t pick = k;
        for (std::size_t o : hosts) {
          const int load = static_cast<int>(clusters[o].member_ids.size()) + extra[o];
          if (load < w && (pick == k || load < static_cast<int>(clusters[pick].member_ids.size()) +
                                                   extra[pick])) {
            pick = o;
          }
        }
        if (pick == k) break;
        ++extra[pick];
        moves.emplace_back(id, pick);
      }
      if (moves.size() != clusters[c].member_ids.size()) continue;
      for (const auto& [id, o] : moves) {
        auto& ids = clusters[o].member_ids;
        ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
      }
      clusters[c].member_ids.clear();
      alive[c] = 0;
      changed = true;
    }
  }
  std::vector<Cluster> kept;
  for (std::size_t c = 0; c < k; ++c) {
    if (alive[c]) kept.push_back(std::move(clusters[c]));
  }
  clusters = std::move(kept);
}

}  // namespace

std::vector<int> HapTopology::degrees() const {
  std::vector<int> deg(haps.size(), 0);
  for (const HapLink& l : links) {
    ++deg[l.a];
    ++deg[l.b];
  }
  return deg;
}

Scenario generate_scenario(const ScenarioOptions& options) {
  if (options.n_nodes < 2) throw Error(ErrorCode::kInvalidArgument, "n_nodes must be >= 2");
  if (!(options.area_side > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "area_side must be > 0");
  }
  if (!(options.wavelength_capacity > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "wavelength capacity must be > 0");
  }
  if (options.demands_per_node < 0) {
    throw Error(ErrorCode::kInvalidArgument, "demands_per_node must be >= 0");
  }

  PortableRng rng(options.seed);
  Scenario s;
  s.area_side = options.area_side;
  s.seed = options.seed;
  s.nodes.reserve(options.n_nodes);
  for (int i = 0; i < options.n_nodes; ++i) {
    const double x = rng.uniform01() * options.area_side;
    const double y = rng.uniform01() * options.area_side;
    s.nodes.push_back(GroundNode{i, x, y});
  }

  const int fan_out = std::min(options.demands_per_node, options.n_nodes - 1);
  std::vector<double> out_sum(options.n_nodes, 0.0);
  std::vector<double> in_sum(options.n_nodes, 0.0);
  for (int src = 0; src < options.n_nodes; ++src) {
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < fan_out) {
      const int dst = static_cast<int>(rng.below(options.n_nodes - 1));
      picked.insert(dst >= src ? dst + 1 : dst);
    }
    for (int dst : picked) {
      const double magnitude = 1.0 - rng.uniform01();  // (0, 1]
      s.demands.push_back(Demand{src, dst, magnitude});
      out_sum[src] += magnitude;
      in_sum[dst] += magnitude;
    }
  }
  // Dividing by the larger of the two endpoint totals bounds every row and
  // column sum by the capacity.
  for (Demand& d : s.demands) {
    d.bandwidth =
        options.wavelength_capacity * d.bandwidth / std::max(out_sum[d.src], in_sum[d.dst]);
  }
  return s;
}

void validate_scenario(const Scenario& scenario, double wavelength_capacity) {
  const int n = static_cast<int>(scenario.nodes.size());
  if (!(scenario.area_side > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "area_side must be > 0");
  }
  for (int i = 0; i < n; ++i) {
    const GroundNode& g = scenario.nodes[i];
    if (g.id != i) {
      throw Error(ErrorCode::kInvalidArgument,
                  "node ids must equal their index; node " + std::to_string(i) +
                      " has id " + std::to_string(g.id));
    }
    if (!(g.x >= 0.0 && g.x <= scenario.area_side && g.y >= 0.0 &&
          g.y <= scenario.area_side)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "node " + std::to_string(i) + " lies outside the area");
    }
  }
  std::vector<double> out_sum(n, 0.0);
  std::vector<double> in_sum(n, 0.0);
  for (const Demand& d : scenario.demands) {
    if (d.src < 0 || d.src >= n || d.dst < 0 || d.dst >= n || d.src == d.dst) {
      throw Error(ErrorCode::kInvalidArgument, "demand endpoints must be distinct node ids");
    }
    if (!(d.bandwidth >= 0.0) || !std::isfinite(d.bandwidth)) {
      throw Error(ErrorCode::kInvalidArgument, "demand bandwidth must be >= 0");
    }
    out_sum[d.src] += d.bandwidth;
    in_sum[d.dst] += d.bandwidth;
  }
  const double limit = wavelength_capacity * (1.0 + 1e-9);
  for (int i = 0; i < n; ++i) {
    if (out_sum[i] > limit || in_sum[i] > limit) {
      throw Error(ErrorCode::kInvalidArgument,
                  "node " + std::to_string(i) + " exceeds the wavelength capacity");
    }
  }
}

std::vector<Cluster> cluster_nodes(const Scenario& scenario, double radius, int w) {
  if (!(radius > 0.0)) throw Error(ErrorCode::kInvalidArgument, "radius must be > 0");
  if (w < 1) throw Error(ErrorCode::kInvalidArgument, "w must be >= 1");

  const auto& nodes = scenario.nodes;
  NodeGrid grid(nodes, radius);
  std::vector<char> covered(nodes.size(), 0);
  std::size_t remaining = nodes.size();
  std::vector<Cluster> clusters;

  while (remaining > 0) {
    Point best_center;
    std::size_t best_count = 0;
    for (const GroundNode& n : nodes) {
      if (covered[n.id]) continue;
      const Point own{n.x, n.y};
      const std::vector<int> around = grid.query(own, radius);
      if (std::min<std::size_t>(around.size(), w) > best_count) {
        best_count = std::min<std::size_t>(around.size(), w);
        best_center = own;
      }
      const Point mid = centroid(nodes, around);
      const std::size_t mid_count = std::min<std::size_t>(grid.query(mid, radius).size(), w);
      if (mid_count > best_count) {
        best_count = mid_count;
        best_center = mid;
      }
    }

    std::vector<int> members = grid.query(best_center, radius);
    if (static_cast<int>(members.size()) > w) {
      std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
        return distance(nodes[a].x, nodes[a].y, best_center.x, best_center.y) <
               distance(nodes[b].x, nodes[b].y, best_center.x, best_center.y);
      });
      members.resize(w);
      std::sort(members.begin(), members.end());
    }
    for (int id : members) {
      covered[id] = 1;
      grid.remove(id);
    }
    remaining -= members.size();
    clusters.push_back(Cluster{best_center, std::move(members), radius});
  }
  dissolve_redundant_clusters(nodes, clusters, radius, w);
  return clusters;
}

int lightpath_count(double flow, double wavelength_capacity) {
  if (!(wavelength_capacity > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "wavelength capacity must be > 0");
  }
  if (flow <= 0.0) return 0;
  return static_cast<int>(std::ceil(flow / wavelength_capacity - 1e-9));
}

std::vector<LightpathDemand> aggregate_demands(const Scenario& scenario,
                                               const std::vector<Cluster>& clusters,
                                               double wavelength_capacity) {
  std::vector<int> owner(scenario.nodes.size(), -1);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (int id : clusters[c].member_ids) owner.at(id) = static_cast<int>(c);
  }
  std::map<std::pair<int, int>, double> flows;
  for (const Demand& d : scenario.demands) {
    const int a = owner.at(d.src);
    const int b = owner.at(d.dst);
    if (a < 0 || b < 0) {
      throw Error(ErrorCode::kInvalidArgument, "demand endpoint not in any cluster");
    }
    if (a != b) flows[{a, b}] += d.bandwidth;
  }
  std::vector<LightpathDemand> out;
  out.reserve(flows.size());
  for (const auto& [pair, flow] : flows) {
    const int count = lightpath_count(flow, wavelength_capacity);
    if (count > 0) out.push_back(LightpathDemand{pair.first, pair.second, flow, count});
  }
  return out;
}

std::vector<Hap> place_haps(const std::vector<Cluster>& clusters, double h) {
  std::vector<Hap> haps;
  haps.reserve(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    haps.push_back(Hap{static_cast<int>(i), clusters[i].center.x, clusters[i].center.y, h});
  }
  return haps;
}

RoutingOutcome build_topology(const std::vector<Hap>& haps,
                              const std::vector<LightpathDemand>& demands, double l_hh,
                              int v, int w) {
  const int k = static_cast<int>(haps.size());
  RoutingOutcome out;
  out.topology.haps = haps;

  std::vector<std::vector<int>> reach(k);
  std::vector<double> length(static_cast<std::size_t>(k) * k, 0.0);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      const double d = distance(haps[a].x, haps[a].y, haps[b].x, haps[b].y);
      length[static_cast<std::size_t>(a) * k + b] = d;
      if (d <= l_hh) reach[a].push_back(b);
    }
  }

  auto& links = out.topology.links;
  std::vector<int> link_of(static_cast<std::size_t>(k) * k, -1);
  std::vector<int> degree(k, 0);
  auto link_index = [&](int a, int b) { return link_of[static_cast<std::size_t>(a) * k + b]; };
  auto load = [&](int from, int to) -> int& {
    HapLink& l = links[link_index(from, to)];
    return from < to ? l.load_ab : l.load_ba;
  };

  std::vector<LightpathDemand> order = demands;
  std::stable_sort(order.begin(), order.end(),
                   [](const LightpathDemand& x, const LightpathDemand& y) {
                     if (x.lightpaths != y.lightpaths) return x.lightpaths > y.lightpaths;
                     return std::tie(x.src_hap, x.dst_hap) < std::tie(y.src_hap, y.dst_hap);
                   });

  const double inf = std::numeric_limits<double>::infinity();
  // State = hap * 2 + (arrived over a link that does not exist yet).
  std::vector<double> dist(2 * static_cast<std::size_t>(k));
  std::vector<int> prev(2 * static_cast<std::size_t>(k));
  using Entry = std::tuple<double, int>;

  for (const LightpathDemand& dem : order) {
    if (dem.lightpaths <= 0) continue;
    if (dem.src_hap < 0 || dem.src_hap >= k || dem.dst_hap < 0 || dem.dst_hap >= k ||
        dem.src_hap == dem.dst_hap) {
      throw Error(ErrorCode::kInvalidArgument, "lightpath demand with bad HAP ids");
    }
    const int count = dem.lightpaths;
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(prev.begin(), prev.end(), -1);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    const int start = dem.src_hap * 2;
    dist[start] = 0.0;
    queue.emplace(0.0, start);
    int goal = -1;

    while (!queue.empty()) {
      const auto [d, state] = queue.top();
      queue.pop();
      if (d > dist[state]) continue;
      const int u = state / 2;
      const int via_new = state % 2;
      if (u == dem.dst_hap) {
        goal = state;
        break;
      }
      for (int nb : reach[u]) {
        int next;
        double cost;
        if (link_index(u, nb) >= 0) {
          if (w - load(u, nb) < count) continue;
          next = nb * 2;
          cost = kExistingLinkCost;
        } else {
          if (count > w || degree[u] + via_new + 1 > v || degree[nb] + 1 > v) continue;
          next = nb * 2 + 1;
          cost = kNewLinkCost;
        }
        if (d + cost < dist[next]) {
          dist[next] = d + cost;
          prev[next] = state;
          queue.emplace(dist[next], next);
        }
      }
    }

    if (goal < 0) {
      out.failed = dem;
      return out;
    }
    std::vector<int> walk;
    for (int s = goal; s >= 0; s = prev[s]) walk.push_back(s / 2);
    std::reverse(walk.begin(), walk.end());
    const std::vector<int> route = simplify_walk(walk);

    // Re-check the simplified route as a whole before committing it.
    std::vector<int> extra(k, 0);
    bool feasible = true;
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
      const int a = route[i];
      const int b = route[i + 1];
      if (link_index(a, b) >= 0) {
        feasible = feasible && (w - load(a, b) >= count);
      } else {
        ++extra[a];
        ++extra[b];
      }
    }
    for (int node : route) feasible = feasible && degree[node] + extra[node] <= v;
    if (!feasible) {
      out.failed = dem;
      return out;
    }

    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
      const int a = route[i];
      const int b = route[i + 1];
      if (link_index(a, b) < 0) {
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        const int idx = static_cast<int>(links.size());
        links.push_back(HapLink{lo, hi, length[static_cast<std::size_t>(lo) * k + hi], 0, 0});
        link_of[static_cast<std::size_t>(a) * k + b] = idx;
        link_of[static_cast<std::size_t>(b) * k + a] = idx;
        ++degree[a];
        ++degree[b];
      }
      load(a, b) += count;
    }
    out.topology.lightpaths.push_back(
        RoutedLightpath{dem.src_hap, dem.dst_hap, route, count});
  }
  return out;
}

NetworkPlan design_network(const OptimizerInputs& inputs, const Scenario& scenario,
                           const DesignOptions& options) {
  validate_scenario(scenario, options.wavelength_capacity);
  OptimizerInputs in = inputs;
  in.n_nodes = static_cast<int>(scenario.nodes.size());
  in.area = scenario.area_side * scenario.area_side;

  std::optional<MfsoConfig> clustered_for;
  std::vector<Cluster> clusters;
  for (int v = inputs.v_max; v <= options.v_ceiling; ++v) {
    in.v_max = v;
    OptimalConfig config;
    try {
      config = find_optimal_mfso(in, options.step_deg);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEnergyInfeasible) throw;
      throw Error(ErrorCode::kDesignInfeasible,
                  "V=" + std::to_string(v) + " exceeds the solar budget before all "
                  "lightpaths could be routed");
    }
    if (!clustered_for || !(*clustered_for == config.cfg)) {
      clusters = cluster_nodes(scenario, config.r_ext, in.w);
      clustered_for = config.cfg;
    }
    const std::vector<Hap> haps = place_haps(clusters, in.link.h);
    const std::vector<LightpathDemand> demands =
        aggregate_demands(scenario, clusters, options.wavelength_capacity);
    RoutingOutcome routed = build_topology(haps, demands, options.l_hh, v, in.w);
    if (!routed.ok()) continue;

    NetworkPlan plan;
    plan.config = config;
    plan.clusters = clusters;
    plan.topology = std::move(routed.topology);
    plan.cost = network_cost(in.cost, static_cast<int>(plan.clusters.size()), config.cfg.m,
                             static_cast<int>(plan.topology.links.size()));
    plan.v_used = v;
    return plan;
  }
  throw Error(ErrorCode::kDesignInfeasible,
              "routing still fails at the V ceiling " + std::to_string(options.v_ceiling));
}

std::vector<std::string> validate_plan(const NetworkPlan& plan, const Scenario& scenario,
                                       const OptimizerInputs& inputs,
                                       const DesignOptions& options) {
  std::vector<std::string> issues;
  auto fail = [&](const std::string& msg) { issues.push_back(msg); };
  const int n = static_cast<int>(scenario.nodes.size());
  const int k = static_cast<int>(plan.clusters.size());
  const int w = inputs.w;
  const MfsoConfig& cfg = plan.config.cfg;
  const LinkBudgetParams& link = inputs.link;

  // Configuration constraints.
  if (border_power_principal(link, cfg.alpha, inputs.convention) < link.rho_rx) {
    fail("principal border power below rho_rx");
  }
  if (cfg.m > 0) {
    if (!cfg.beta) {
      fail("m > 0 without beta");
    } else {
      const GeometryIntermediates g = extended_geometry(link, cfg);
      if (joint_power(link, g.l_j, *cfg.beta, inputs.convention) < link.rho_rx) {
        fail("joint-point power below rho_rx");
      }
    }
  }
  if (coverage_radius(link, cfg) != plan.config.r_ext) fail("stored r_ext is stale");
  if (!solar_feasible(inputs.energy, cfg.m + 1, plan.v_used)) {
    fail("configuration exceeds the solar budget at V=" + std::to_string(plan.v_used));
  }

  // Clusters.
  if (k < hap_lower_bound(n, w)) fail("fewer clusters than ceil(|N|/W)");
  std::vector<int> seen(n, 0);
  for (int c = 0; c < k; ++c) {
    const Cluster& cl = plan.clusters[c];
    if (static_cast<int>(cl.member_ids.size()) > w) {
      fail("cluster " + std::to_string(c) + " exceeds W members");
    }
    if (cl.member_ids.empty()) fail("cluster " + std::to_string(c) + " is empty");
    if (cl.radius != plan.config.r_ext) fail("cluster radius differs from r_ext");
    for (int id : cl.member_ids) {
      if (id < 0 || id >= n) {
        fail("cluster member id out of range");
        continue;
      }
      ++seen[id];
      const GroundNode& g = scenario.nodes[id];
      if (distance(g.x, g.y, cl.center.x, cl.center.y) > cl.radius) {
        fail("node " + std::to_string(id) + " lies outside its cluster radius");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (seen[i] != 1) fail("node " + std::to_string(i) + " is covered " +
                           std::to_string(seen[i]) + " times");
  }

  // HAPs and links.
  const HapTopology& topo = plan.topology;
  if (static_cast<int>(topo.haps.size()) != k) fail("HAP count differs from cluster count");
  for (int i = 0; i < std::min<int>(k, static_cast<int>(topo.haps.size())); ++i) {
    const Hap& h = topo.haps[i];
    if (h.id != i || h.x != plan.clusters[i].center.x || h.y != plan.clusters[i].center.y ||
        h.elevation != link.h) {
      fail("HAP " + std::to_string(i) + " is not above its cluster centre");
    }
  }
  const int hk = static_cast<int>(topo.haps.size());
  std::map<std::pair<int, int>, int> link_at;
  std::vector<int> degree(hk, 0);
  for (std::size_t i = 0; i < topo.links.size(); ++i) {
    const HapLink& l = topo.links[i];
    if (l.a < 0 || l.b >= hk || l.a >= l.b) {
      fail("malformed link");
      continue;
    }
    if (!link_at.emplace(std::make_pair(l.a, l.b), static_cast<int>(i)).second) {
      fail("duplicate link");
    }
    ++degree[l.a];
    ++degree[l.b];
    const double d = distance(topo.haps[l.a].x, topo.haps[l.a].y, topo.haps[l.b].x,
                              topo.haps[l.b].y);
    if (l.length != d) fail("stored link length differs from HAP distance");
    if (l.length > options.l_hh) fail("link longer than L_HH");
    if (l.wavelengths_used() > w) fail("link carries more than W wavelengths");
  }
  for (int i = 0; i < hk; ++i) {
    if (degree[i] > plan.v_used) fail("HAP " + std::to_string(i) + " exceeds degree V");
  }

  // Lightpaths: recompute directional loads and demand coverage.
  std::map<std::pair<int, int>, int> routed;
  std::map<std::pair<int, int>, std::pair<int, int>> loads;
  std::map<std::pair<int, int>, int> uses;
  for (const RoutedLightpath& lp : topo.lightpaths) {
    routed[{lp.src_hap, lp.dst_hap}] += lp.count;
    if (lp.route.size() < 2 || lp.route.front() != lp.src_hap ||
        lp.route.back() != lp.dst_hap) {
      fail("route endpoints do not match its demand");
      continue;
    }
    std::set<int> visited(lp.route.begin(), lp.route.end());
    if (visited.size() != lp.route.size()) fail("route revisits a HAP");
    for (std::size_t i = 0; i + 1 < lp.route.size(); ++i) {
      const int a = lp.route[i];
      const int b = lp.route[i + 1];
      const auto key = std::make_pair(std::min(a, b), std::max(a, b));
      if (!link_at.count(key)) {
        fail("route uses a link missing from the topology");
        continue;
      }
      ++uses[key];
      auto& ld = loads[key];
      (a < b ? ld.first : ld.second) += lp.count;
    }
  }
  for (const auto& [key, idx] : link_at) {
    const HapLink& l = topo.links[idx];
    const auto ld = loads[key];
    if (l.load_ab != ld.first || l.load_ba != ld.second) fail("link load differs from routes");
    if (!uses[key]) fail("link carries no lightpath");
  }
  if (static_cast<int>(topo.haps.size()) == k) {
    const auto expected =
        aggregate_demands(scenario, plan.clusters, options.wavelength_capacity);
    std::map<std::pair<int, int>, int> want;
    for (const LightpathDemand& d : expected) want[{d.src_hap, d.dst_hap}] = d.lightpaths;
    if (want != routed) fail("routed lightpaths differ from the aggregated demand");
  }

  // Cost.
  const CostBreakdown recomputed =
      network_cost(inputs.cost, k, cfg.m, static_cast<int>(topo.links.size()));
  if (!(recomputed == plan.cost)) fail("stored cost differs from recomputation");
  return issues;
}

}  // namespace hapfso
