#pragma once

#include <complex>

namespace diatomic {

struct AiryValue {
  double z = 0;
  double ai = 0;
  double ai_prime = 0;
};

AiryValue airy(double z);
double airy_ai(double z);
double airy_ai_prime(double z);

// For z > 0 returns Ai and Ai' multiplied by exp(2/3 z^{3/2}); for z <= 0 the plain values.
AiryValue airy_scaled(double z);

// A^{+/-}(y) envelope functions; sign must be +1 or -1 and y > 0.
std::complex<double> envelope_A(double y, int sign);

}  // namespace diatomic
