#include "splitex/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "splitex/canon.hpp"
#include "splitex/constructions.hpp"
#include "splitex/errors.hpp"
#include "splitex/exact.hpp"
#include "splitex/oracles.hpp"

namespace splitex {

namespace {

using Real = long double;

constexpr long kStagnationWindow = 20000;

struct ComponentEstimate {
  Real lo = 0;
  Real hi = 0;
  std::vector<int> vertices;
  std::vector<Real> x;  // unit 2-norm over `vertices`
  long iterations = 0;
};

double round_up(Real v) {
  double d = static_cast<double>(v);
  if (static_cast<Real>(d) < v) d = std::nextafter(d, INFINITY);
  return d;
}

// Slack for moving the long double certificate to doubles.
Real conversion_slack(int max_degree, Real hi) {
  return static_cast<Real>(max_degree + 4) * static_cast<Real>(DBL_EPSILON) * std::max<Real>(hi, 1);
}

ComponentEstimate estimate_component(const Graph& g, VertexSet comp, double tol, long max_iterations) {
  ComponentEstimate c;
  c.vertices = comp.to_vector();
  const std::size_t k = c.vertices.size();
  if (k == 1) {
    c.x = {1};
    return c;
  }
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < k; ++i) local[static_cast<std::size_t>(c.vertices[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(k);
  int max_deg = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (int w : g.neighbors(c.vertices[i])) adj[i].push_back(local[static_cast<std::size_t>(w)]);
    max_deg = std::max(max_deg, static_cast<int>(adj[i].size()));
  }

  std::vector<Real> x(k, 1 / std::sqrt(static_cast<Real>(k)));
  std::vector<Real> y(k);
  Real best_width = INFINITY;
  long since_best = 0;
  long it = 0;
  for (;; ++it) {
    for (std::size_t i = 0; i < k; ++i) {
      Real s = 0;
      for (int j : adj[i]) s += x[static_cast<std::size_t>(j)];
      y[i] = s;
    }
    Real lo = INFINITY;
    Real hi = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Real ratio = y[i] / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    // Rounding in the ratios themselves.
    const Real fuzz = 4 * static_cast<Real>(max_deg + 1) * LDBL_EPSILON * hi;
    lo -= fuzz;
    hi += fuzz;
    Real num = 0;
    Real den = 0;
    for (std::size_t i = 0; i < k; ++i) {
      num += x[i] * y[i];
      den += x[i] * x[i];
    }
    // The residual of x is bounded by the full Collatz–Wielandt spread, so
    // that spread is what has to shrink below tol.
    const Real width = hi - lo;
    c.lo = std::max(lo, num / den - fuzz);
    c.hi = hi;
    if (width + conversion_slack(max_deg, hi) <= tol) break;
    if (width < best_width) {
      best_width = width;
      since_best = 0;
    } else if (++since_best >= kStagnationWindow) {
      throw PrecisionError("power iteration stagnated", round_up(best_width + conversion_slack(max_deg, hi)));
    }
    if (it >= max_iterations)
      throw PrecisionError("power iteration hit the iteration cap", round_up(best_width + conversion_slack(max_deg, hi)));

    Real norm = 0;
    for (std::size_t i = 0; i < k; ++i) {
      y[i] += x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
  }
  c.x = std::move(x);
  c.iterations = it;
  return c;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  SpectralOptions options;
  options.tol = tol;
  return spectral_radius(g, options);
}

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options) {
  if (!(options.tol > 0)) throw DomainError("tolerance must be positive");
  const int n = g.order();
  if (n < 1) throw DomainError("graph has no vertices");

  std::vector<ComponentEstimate> parts;
  for (VertexSet comp : connected_components(g))
    parts.push_back(estimate_component(g, comp, options.tol, options.max_iterations));

  Real lo = 0;
  Real hi = 0;
  std::size_t attain = 0;
  long iterations = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    lo = std::max(lo, parts[i].lo);
    hi = std::max(hi, parts[i].hi);
    if (parts[i].lo + parts[i].hi > parts[attain].lo + parts[attain].hi) attain = i;
    iterations = std::max(iterations, parts[i].iterations);
  }

  SpectralResult out;
  out.iterations = static_cast<int>(iterations);
  out.perron.assign(static_cast<std::size_t>(n), 0.0);
  const ComponentEstimate& best = parts[attain];
  for (std::size_t i = 0; i < best.vertices.size(); ++i)
    out.perron[static_cast<std::size_t>(best.vertices[i])] = static_cast<double>(best.x[i]);
  Real norm = 0;
  for (double v : out.perron) norm += static_cast<Real>(v) * v;
  norm = std::sqrt(norm);
  for (double& v : out.perron) v = static_cast<double>(v / norm);

  if (hi == 0) {
    out.rho = 0;
    out.err = 0;
    return out;
  }

  out.rho = static_cast<double>((lo + hi) / 2);
  const Real rho = out.rho;
  Real residual = 0;
  for (int v = 0; v < n; ++v) {
    Real s = 0;
    for (int w : g.neighbors(v)) s += out.perron[static_cast<std::size_t>(w)];
    residual = std::max(residual, std::fabs(s - rho * out.perron[static_cast<std::size_t>(v)]));
  }
  const Real err = std::max({rho - lo, hi - rho, residual}) + conversion_slack(g.max_degree(), hi);
  out.err = round_up(err);
  if (out.err > options.tol)
    throw PrecisionError("certified error exceeds the requested tolerance", out.err);
  return out;
}

namespace {

std::optional<std::strong_ordering> separate(const SpectralResult& a, const SpectralResult& b) {
  if (a.upper() < b.lower()) return std::strong_ordering::less;
  if (a.lower() > b.upper()) return std::strong_ordering::greater;
  return std::nullopt;
}

RationalInterval hint_of(const SpectralResult& r) {
  return {to_rational(std::nextafter(r.lower(), -INFINITY)), to_rational(std::nextafter(r.upper(), INFINITY))};
}

}  // namespace

RhoComparison compare_rho_detailed(const Graph& g1, const Graph& g2) {
  if (g1.order() < 1 || g2.order() < 1) throw DomainError("graph has no vertices");
  const SpectralResult r1 = spectral_radius(g1);
  const SpectralResult r2 = spectral_radius(g2);
  if (auto order = separate(r1, r2)) return {*order, Route::numeric};

  const bool exact_ok = g1.order() <= kExactOrderLimit && g2.order() <= kExactOrderLimit;
  if (!exact_ok) {
    try {
      const SpectralResult f1 = spectral_radius(g1, 1e-14);
      const SpectralResult f2 = spectral_radius(g2, 1e-14);
      if (auto order = separate(f1, f2)) return {*order, Route::numeric};
    } catch (const PrecisionError&) {
    }
    throw UndecidableComparison("spectral radii overlap and the graphs exceed the exact order limit");
  }
  const auto order = compare_largest_roots(characteristic_polynomial(g1), characteristic_polynomial(g2),
                                           hint_of(r1), hint_of(r2));
  return {order, Route::exact};
}

std::strong_ordering compare_rho(const Graph& g1, const Graph& g2) { return compare_rho_detailed(g1, g2).order; }

namespace {

BoundReport report(std::string name, const SpectralResult& r, double limit) {
  BoundReport b;
  b.bound = std::move(name);
  b.rho = r.rho;
  b.err = r.err;
  b.limit = limit;
  b.slack = limit - r.rho;
  b.holds = r.lower() <= limit;
  b.equality_candidate = r.upper() >= limit && r.lower() <= limit;
  return b;
}

}  // namespace

BoundReport check_nosal(const Graph& g) {
  if (contains_clique(g, 3)) throw DomainError("graph contains a triangle");
  return report("nosal", spectral_radius(g), std::sqrt(static_cast<double>(g.edge_count())));
}

BoundReport check_wilf(const Graph& g, int r) {
  if (r < 1) throw DomainError("r must be at least 1");
  if (contains_clique(g, r + 1)) throw DomainError("graph contains K_" + std::to_string(r + 1));
  return report("wilf", spectral_radius(g), (1.0 - 1.0 / r) * g.order());
}

BoundReport check_spectral_turan(const Graph& g, int r) {
  if (r < 1) throw DomainError("r must be at least 1");
  if (contains_clique(g, r + 1)) throw DomainError("graph contains K_" + std::to_string(r + 1));
  const Graph t = turan(g.order(), std::min(r, g.order())).graph;
  const SpectralResult rt = spectral_radius(t);
  BoundReport b = report("spectral_turan", spectral_radius(g), rt.rho);
  try {
    const RhoComparison cmp = compare_rho_detailed(g, t);
    b.turan_order = cmp;
    b.holds = cmp.order != std::strong_ordering::greater;
    b.equality_candidate = cmp.order == std::strong_ordering::equal;
  } catch (const UndecidableComparison&) {
    b.holds = b.rho - b.err <= rt.upper();
    b.equality_candidate = b.rho + b.err >= rt.lower();
  }
  return b;
}

void validate_rotation(const Graph& g, const RotationSpec& spec) {
  const int n = g.order();
  if (spec.u < 0 || spec.u >= n || spec.v < 0 || spec.v >= n) throw DomainError("rotation vertex out of range");
  if (spec.u == spec.v) throw DomainError("rotation needs distinct u and v");
  if (spec.private_neighbors.empty()) throw DomainError("rotation needs at least one private neighbor");
  for (int w : spec.private_neighbors) {
    if (w >= n || !g.adjacent(spec.v, w)) throw DomainError("vertex " + std::to_string(w) + " is not a neighbor of v");
    if (w == spec.u || g.adjacent(spec.u, w))
      throw DomainError("vertex " + std::to_string(w) + " is not private to v");
  }
}

Graph rotate_edges(const Graph& g, const RotationSpec& spec) {
  validate_rotation(g, spec);
  GraphBuilder b(g);
  for (int w : spec.private_neighbors) {
    b.remove_edge(spec.v, w);
    b.add_edge(spec.u, w);
  }
  return b.build();
}

PerronOrder compare_perron_entries(const Graph& g, int u, int v) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("vertex out of range");
  if (!is_connected(g)) throw DomainError("graph is not connected");
  if (u == v) return {std::strong_ordering::equal, "orbit"};
  const CanonicalForm cf = canonical_form(g);
  if (cf.orbits[static_cast<std::size_t>(u)] == cf.orbits[static_cast<std::size_t>(v)])
    return {std::strong_ordering::equal, "orbit"};
  if (n > kExactOrderLimit) return {std::nullopt, "numeric"};

  const Polynomial phi = characteristic_polynomial(g);
  const SpectralResult r = spectral_radius(g);

  // Every eigenvalue other than ρ lies at or below c.
  const Rational sep = separate_largest_root(phi);
  double c = sep.convert_to<double>();
  while (to_rational(c) < sep) c = std::nextafter(c, INFINITY);
  const Real theta = r.rho;
  if (theta - r.err > c) {
    Real res2 = 0;
    for (int a = 0; a < n; ++a) {
      Real s = 0;
      for (int w : g.neighbors(a)) s += r.perron[static_cast<std::size_t>(w)];
      const Real d = s - theta * r.perron[static_cast<std::size_t>(a)];
      res2 += d * d;
    }
    const Real res = std::sqrt(res2) + static_cast<Real>(n) * conversion_slack(g.max_degree(), theta);
    const Real e = std::sqrt(Real{2}) * res / (theta - c) * (1 + 1e-9L) + 1e-15L;
    const Real diff = static_cast<Real>(r.perron[static_cast<std::size_t>(u)]) - r.perron[static_cast<std::size_t>(v)];
    if (diff > 2 * e) return {std::strong_ordering::greater, "numeric"};
    if (diff < -2 * e) return {std::strong_ordering::less, "numeric"};
  }

  // x_u^2 is a positive multiple of the characteristic polynomial of G - u at ρ.
  const Polynomial du = characteristic_polynomial(induced_subgraph(g, g.vertices().without(u)));
  const Polynomial dv = characteristic_polynomial(induced_subgraph(g, g.vertices().without(v)));
  const int s = sign_at_largest_root(phi, du - dv, hint_of(r));
  const auto order = s > 0 ? std::strong_ordering::greater
                           : (s < 0 ? std::strong_ordering::less : std::strong_ordering::equal);
  return {order, "exact"};
}

RotationCheck verify_rotation_lemma(const Graph& g, const RotationSpec& spec) {
  if (!is_connected(g)) throw DomainError("graph is not connected");
  validate_rotation(g, spec);
  RotationCheck out;
  out.perron = compare_perron_entries(g, spec.u, spec.v);
  if (!out.perron.order) return out;
  if (*out.perron.order == std::strong_ordering::less) throw DomainError("Perron entry of u is below that of v");
  try {
    out.comparison = compare_rho_detailed(rotate_edges(g, spec), g);
  } catch (const UndecidableComparison&) {
    return out;
  }
  out.verdict = out.comparison->order == std::strong_ordering::greater ? Verdict::holds : Verdict::fails;
  return out;
}

std::string to_string(std::strong_ordering order) {
  if (order == std::strong_ordering::less) return "less";
  if (order == std::strong_ordering::greater) return "greater";
  return "equal";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::indeterminate:
      break;
  }
  return "indeterminate";
}

}  // namespace splitex
