#include "diatomic/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diatomic {

namespace {

struct Reference {
  std::vector<double> x, w;
  Reference() {
    using Rule = boost::math::quadrature::gauss<double, kNodesPerPanel>;
    const auto& ab = Rule::abscissa();
    const auto& wt = Rule::weights();
    for (std::size_t i = 0; i < ab.size(); ++i) {
      x.push_back(ab[i]);
      w.push_back(wt[i]);
      if (ab[i] != 0.0) {
        x.push_back(-ab[i]);
        w.push_back(wt[i]);
      }
    }
  }
};

const Reference& reference() {
  static const Reference r;
  return r;
}

}  // namespace

NodeSet gauss_legendre_panels(double a, double b, std::size_t panels) {
  if (panels == 0) throw std::invalid_argument("gauss_legendre_panels: zero panels");
  const Reference& ref = reference();
  NodeSet ns;
  ns.x.reserve(panels * ref.x.size());
  ns.w.reserve(panels * ref.x.size());
  const double hw = 0.5 * (b - a) / static_cast<double>(panels);
  for (std::size_t k = 0; k < panels; ++k) {
    const double mid = a + (2.0 * static_cast<double>(k) + 1.0) * hw;
    for (std::size_t i = 0; i < ref.x.size(); ++i) {
      ns.x.push_back(mid + hw * ref.x[i]);
      ns.w.push_back(hw * ref.w[i]);
    }
  }
  return ns;
}

std::size_t panels_for(double width, double rate, double max_panel, double nodes_per_oscillation) {
  const double osc = std::fabs(rate) * std::fabs(width) / (2.0 * std::numbers::pi);
  const double by_phase = std::ceil(osc * nodes_per_oscillation / kNodesPerPanel);
  const double by_width = std::ceil(std::fabs(width) / max_panel);
  return static_cast<std::size_t>(std::max({1.0, by_phase, by_width}));
}

}  // namespace diatomic
