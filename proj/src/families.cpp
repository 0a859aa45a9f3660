#include "hampow/families.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "hampow/error.hpp"

namespace hampow {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<Vertex> Rng::sample(std::size_t n, std::size_t count) {
  std::vector<Vertex> pool(n);
  for (Vertex i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + below(n - i)]);
  pool.resize(count);
  return pool;
}

GkParams GkParams::of(std::size_t k) {
  if (k < 4) throw Error(ErrorCode::kParameterTooSmall, "G_k needs k >= 4, got " + std::to_string(k));
  GkParams p;
  p.k = k;
  p.ell = k * (k + 1) / 2;
  p.n = 2 * p.ell - 1;
  p.m = k * (k * k + 2 * k - 1) / 2;
  return p;
}

std::size_t phi(std::size_t i, std::size_t k) {
  const std::size_t ell = k * (k + 1) / 2;
  if (i < 1 || i > ell) {
    throw Error(ErrorCode::kIndexOutOfRange, "phi index " + std::to_string(i) + " outside [1," + std::to_string(ell) + "]");
  }
  std::size_t partial = 0;
  for (std::size_t p = 1;; ++p) {
    partial += k + 1 - p;
    if (partial >= i) return p;
  }
}

std::vector<Vertex> GkGraph::v_vertices() const {
  std::vector<Vertex> vs;
  for (std::size_t i = 1; i <= params.ell; ++i) vs.push_back(v(i));
  return vs;
}

GkGraph generate_gk(std::size_t k) {
  GkGraph gk;
  gk.params = GkParams::of(k);
  const std::size_t ell = gk.params.ell;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < ell; ++i) {
    for (std::size_t j = i + 1; j < ell && j - i <= k; ++j) edges.emplace_back(gk.u(i), gk.u(j));
  }
  for (std::size_t i = 1; i <= ell; ++i) {
    const std::size_t p = phi(i, k);
    edges.emplace_back(gk.u(ell - p), gk.v(i));
    edges.emplace_back(gk.v(i), gk.u(p));
  }
  gk.graph = Digraph::build(gk.params.n, edges);
  gk.roles.assign(gk.params.n, Role::kU);
  for (std::size_t i = 1; i <= ell; ++i) gk.roles[gk.v(i)] = Role::kV;
  return gk;
}

std::string_view to_string(ExactStatus s) {
  switch (s) {
    case ExactStatus::kComputed: return "computed";
    case ExactStatus::kIndeterminate: return "indeterminate";
    case ExactStatus::kSkipped: return "skipped";
  }
  return "?";
}

bool GkCertificate::claims_hold() const {
  const bool exact_ok = exact != ExactStatus::kComputed ||
                        (certificate_verified && exponent && *exponent >= lower_bound);
  return counts_match && minimally_eulerian == Verdict::kTrue && v_degrees_unit && u_subgraph_acyclic &&
         min_v_distance >= distance_claim && distance_claim == half_k_claim && half_k_claim >= sqrt_claim &&
         pigeonhole && lower_bound >= sqrt_claim && exact_ok;
}

namespace {

std::size_t isqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

GkCertificate certify_gk(std::size_t k, std::uint64_t budget, std::size_t cycle_cap, bool attempt_exact) {
  const GkGraph gk = generate_gk(k);
  const Digraph& g = gk.graph;
  GkCertificate cert;
  cert.params = gk.params;
  cert.counts_match = g.vertex_count() == gk.params.n && g.edge_count() == gk.params.m;
  cert.minimally_eulerian = is_minimally_eulerian(g, cycle_cap).verdict;

  const auto vs = gk.v_vertices();
  cert.v_degrees_unit = std::all_of(vs.begin(), vs.end(), [&](Vertex v) {
    return g.in_degree(v) == 1 && g.out_degree(v) == 1;
  });

  std::vector<Edge> u_edges;
  for (const auto& [a, b] : g.edges()) {
    if (gk.roles[a] == Role::kU && gk.roles[b] == Role::kU) u_edges.emplace_back(a, b);
  }
  cert.u_subgraph_acyclic = is_acyclic(Digraph::build(gk.params.ell - 1, u_edges));

  cert.min_v_distance = DistanceMatrix::kInfinity;
  for (Vertex a : vs) {
    const auto dist = bfs_distances(g, a);
    for (Vertex b : vs) {
      if (a != b) cert.min_v_distance = std::min(cert.min_v_distance, dist[b]);
    }
  }
  cert.distance_claim = (gk.params.ell + 1 + k - 1) / k;
  cert.half_k_claim = (k + 1) / 2 + 1;
  cert.sqrt_claim = isqrt(gk.params.n) / 2 + 1;
  // ell v-vertices on a Hamilton cycle of 2 ell - 1 vertices cannot all be
  // separated by u-vertices.
  cert.pigeonhole = 2 * gk.params.ell > gk.params.n;
  cert.lower_bound = cert.pigeonhole ? cert.min_v_distance : 1;
  cert.bracket_lo = cert.lower_bound;
  cert.bracket_hi = gk.params.n - 1;

  if (!attempt_exact) return cert;
  const std::size_t start = gk.params.n <= kDpThreshold ? 1 : cert.lower_bound;
  try {
    const auto exponent = ham_exponent(g, budget, start);
    if (exponent) {
      cert.exact = ExactStatus::kComputed;
      cert.exponent = exponent->h;
      cert.certificate = exponent->certificate;
      cert.certificate_verified = verify_certificate(g, exponent->certificate);
      cert.bracket_lo = cert.bracket_hi = exponent->h;
    }
  } catch (const ExponentBudgetExhausted& e) {
    cert.exact = ExactStatus::kIndeterminate;
    cert.bracket_lo = std::max(cert.bracket_lo, e.lo());
    cert.bracket_hi = e.hi();
  }
  return cert;
}

Digraph random_eulerian(std::size_t n, std::size_t cycles, std::uint64_t seed) {
  if (n < 3 || cycles == 0) throw Error(ErrorCode::kInvalidArgument, "random_eulerian needs n >= 3 and cycles >= 1");
  Rng rng(seed);
  const std::size_t max_len = std::min<std::size_t>(n, 8);
  std::size_t rejections = 0;
  auto reject = [&] {
    if (++rejections > kEulerianRejectionCap) {
      throw Error(ErrorCode::kGenerationFailed, "no simple connected union of " + std::to_string(cycles) +
                                                    " dicycles on " + std::to_string(n) + " vertices after " +
                                                    std::to_string(kEulerianRejectionCap) + " rejections");
    }
  };
  while (true) {
    std::set<Edge> edges;
    for (std::size_t c = 0; c < cycles; ++c) {
      while (true) {
        const auto len = static_cast<std::size_t>(rng.between(3, max_len));
        const auto vs = rng.sample(n, len);
        std::vector<Edge> cycle;
        for (std::size_t i = 0; i < len; ++i) cycle.emplace_back(vs[i], vs[(i + 1) % len]);
        if (std::none_of(cycle.begin(), cycle.end(), [&](const Edge& e) { return edges.contains(e); })) {
          edges.insert(cycle.begin(), cycle.end());
          break;
        }
        reject();
      }
    }
    const std::vector<Edge> list(edges.begin(), edges.end());
    Digraph g = Digraph::build(n, list);
    if (is_eulerian(g)) return g;
    reject();
  }
}

Digraph random_dag(std::size_t n, double density, std::uint64_t seed) {
  if (density < 0.0 || density > 1.0) throw Error(ErrorCode::kInvalidArgument, "density must lie in [0,1]");
  Rng rng(seed);
  const auto order = rng.sample(n, n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.unit() < density) edges.emplace_back(order[i], order[j]);
    }
  }
  return Digraph::build(n, edges);
}

Digraph random_strongly_connected(std::size_t n, std::size_t extra, std::uint64_t seed) {
  Rng rng(seed);
  const auto order = rng.sample(n, n);
  std::set<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace(order[rng.below(i)], order[i]);
    edges.emplace(order[i], order[rng.below(i)]);
  }
  if (n >= 2) {
    for (std::size_t added = 0, tries = 0; added < extra && tries < 20 * (extra + 1); ++tries) {
      const auto u = static_cast<Vertex>(rng.below(n));
      const auto v = static_cast<Vertex>(rng.below(n));
      if (u != v && edges.emplace(u, v).second) ++added;
    }
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Digraph::build(n, list);
}

std::vector<std::string> corpus_comments(const std::string& generator, const std::string& params,
                                         std::optional<std::uint64_t> seed) {
  std::vector<std::string> lines{"generator=" + generator + " " + params};
  if (seed) lines.push_back("prng=" + std::string(Rng::kAlgorithm) + " seed=" + std::to_string(*seed));
  return lines;
}

void write_roles(std::ostream& out, const std::vector<Role>& roles) {
  for (Role r : roles) out << (r == Role::kU ? "u" : "v") << '\n';
}

void write_gk_dot(std::ostream& out, const GkGraph& gk) {
  const std::size_t ell = gk.params.ell;
  const double half = static_cast<double>(ell) / 2.0;
  auto name = [&](Vertex x) {
    return gk.roles[x] == Role::kU ? "u" + std::to_string(x + 1) : "v" + std::to_string(x - (ell - 1) + 1);
  };
  std::ostringstream body;
  body << std::fixed << std::setprecision(3);
  body << "digraph G_" << gk.params.k << " {\n";
  body << "  layout=neato;\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 1; i < ell; ++i) {
    body << "  " << name(gk.u(i)) << " [pos=\"" << static_cast<double>(i) << ",0!\"];\n";
  }
  for (std::size_t i = 1; i <= ell; ++i) {
    const double angle = std::numbers::pi * static_cast<double>(ell - i + 1) / static_cast<double>(ell + 1);
    const double x = half + half * std::cos(angle);
    const double y = 1.0 + half * std::sin(angle);
    body << "  " << name(gk.v(i)) << " [pos=\"" << x << "," << y << "!\", style=filled, fillcolor=lightgray];\n";
  }
  for (const auto& [a, b] : gk.graph.edges()) body << "  " << name(a) << " -> " << name(b) << ";\n";
  body << "}\n";
  out << body.str();
}

}  // namespace hampow
