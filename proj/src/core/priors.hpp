#pragma once

#include <cmath>
#include <stdexcept>

namespace tsbm {

// Conjugate hyperparameters: Gamma(a, b) on block intensities, symmetric
// Dirichlet concentrations on the mixing weights (alpha for node clusters,
// gamma for interval clusters). Defaults give uniform label priors and a
// unit-mean, unit-variance intensity prior; 0.5 everywhere is the Jeffreys
// choice.
struct Priors {
  double a = 1.0;
  double b = 1.0;
  double alpha = 1.0;
  double gamma = 1.0;

  void validate() const {
    auto ok = [](double x) { return std::isfinite(x) && x > 0.0; };
    if (!ok(a) || !ok(b) || !ok(alpha) || !ok(gamma))
      throw std::invalid_argument("priors must be strictly positive and finite");
  }
};

}  // namespace tsbm
