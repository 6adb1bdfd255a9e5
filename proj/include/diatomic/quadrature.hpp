#pragma once

#include <cstddef>
#include <vector>

namespace diatomic {

struct NodeSet {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};

inline constexpr int kNodesPerPanel = 16;

// Composite 16-point Gauss-Legendre rule on [a, b] with equal panels.
NodeSet gauss_legendre_panels(double a, double b, std::size_t panels);

// Panel count giving at least `nodes_per_oscillation` nodes per 2*pi of phase for a
// phase rate `rate` (rad per unit p) over `width`, and panels no wider than `max_panel`.
std::size_t panels_for(double width, double rate, double max_panel, double nodes_per_oscillation = 10.0);

}  // namespace diatomic
