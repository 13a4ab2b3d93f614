#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hitchinlab {

inline constexpr const char* kVersion = "0.1.0";

// Rejected input: bad structure, out-of-range values, malformed files.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical post-condition the computation could not meet.
class tolerance_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using complexd = std::complex<double>;

// Seeded random stream with a fixed Gaussian algorithm (Box-Muller) so that
// identical seeds reproduce identical draws independent of the C++ library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform();          // [0, 1)
  double gaussian();         // standard normal
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Gauss-Legendre nodes/weights on [-1, 1] via the Golub-Welsch eigenproblem.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  explicit GaussLegendre(int n);
};

double operator_norm(const Eigen::MatrixXcd& m);  // largest singular value

// Runs fn(i) for i in [0, n). Worker count is capped by the
// HITCHIN_LAB_THREADS environment variable (default: hardware concurrency).
// Work item i always runs with the same index so results are deterministic.
void parallel_for(long n, const std::function<void(long)>& fn);

int env_thread_cap();

std::string format_double(double v);  // shortest round-trip-stable decimal

}  // namespace hitchinlab
