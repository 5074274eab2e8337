#pragma once

// Certified adjacency spectral radius, exact-backed comparisons, the classical
// spectral bounds, and the edge-rotation lemma.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "splitex/graph.hpp"

namespace splitex {

/// rho - err <= ρ(G) <= rho + err, and |A·perron - rho·perron|_∞ <= err.
struct SpectralResult {
  double rho = 0.0;
  double err = 0.0;
  /// Unit 2-norm, nonnegative, supported on one component attaining ρ.
  std::vector<double> perron;
  int iterations = 0;

  double lower() const { return rho - err; }
  double upper() const { return rho + err; }
};

struct SpectralOptions {
  double tol = 1e-12;
  long max_iterations = 1'000'000;
};

/// Power iteration on A + I per connected component. The interval is bounded
/// below by the Rayleigh quotient and above by the Collatz–Wielandt maximum.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12);
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options);

/// How a comparison was settled.
enum class Route { numeric, exact };

struct RhoComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  Route route = Route::numeric;
};

/// Orders ρ(g1) against ρ(g2). Certified intervals decide when they separate;
/// otherwise the largest roots of the exact characteristic polynomials are
/// compared. Equality is only ever reported by the exact route.
RhoComparison compare_rho_detailed(const Graph& g1, const Graph& g2);
std::strong_ordering compare_rho(const Graph& g1, const Graph& g2);

struct BoundReport {
  std::string bound;
  double rho = 0.0;
  double err = 0.0;
  double limit = 0.0;  ///< value the bound asserts ρ does not exceed
  double slack = 0.0;  ///< limit - rho
  bool holds = false;
  /// The certified interval touches the limit, so equality is possible.
  bool equality_candidate = false;
  /// Spectral Turán only: certified order of ρ(G) against ρ(T_{n,r}).
  std::optional<RhoComparison> turan_order;
};

/// ρ(G) <= √m for triangle-free G.
BoundReport check_nosal(const Graph& g);
/// ρ(G) <= (1 - 1/r)·n for K_{r+1}-free G.
BoundReport check_wilf(const Graph& g, int r);
/// ρ(G) <= ρ(T_{n,r}) for K_{r+1}-free G.
BoundReport check_spectral_turan(const Graph& g, int r);

/// Move the edges v–w, w ∈ private_neighbors, over to u.
struct RotationSpec {
  int u = -1;
  int v = -1;
  VertexSet private_neighbors;
};

void validate_rotation(const Graph& g, const RotationSpec& spec);
Graph rotate_edges(const Graph& g, const RotationSpec& spec);

enum class Verdict { holds, fails, indeterminate };

/// Certified order of two Perron-vector entries of a connected graph.
struct PerronOrder {
  std::optional<std::strong_ordering> order;  ///< empty when undecided
  std::string route;                          ///< "orbit", "numeric" or "exact"
};

PerronOrder compare_perron_entries(const Graph& g, int u, int v);

struct RotationCheck {
  Verdict verdict = Verdict::indeterminate;
  PerronOrder perron;
  std::optional<RhoComparison> comparison;
};

/// Checks ρ(G') > ρ(G) for a rotation toward a vertex whose Perron entry is
/// at least that of the donor. Throws DomainError when G is disconnected, the
/// spec is invalid, or x_u < x_v is certified.
RotationCheck verify_rotation_lemma(const Graph& g, const RotationSpec& spec);

std::string to_string(std::strong_ordering order);
std::string to_string(Verdict v);

}  // namespace splitex
