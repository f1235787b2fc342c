#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace advgae {

using Dense = Eigen::MatrixXd;

// Library-wide error with a human-readable context message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

inline void check_finite(const Dense& m, std::string_view what) {
  if (!m.allFinite()) {
    throw NumericError("non-finite value in " + std::string(what) + " (" +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
  }
}

// ---- hashing -------------------------------------------------------------

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 1469598103934665603ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
  return fnv1a64(s.data(), s.size(), h);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// ---- seeded RNG streams ---------------------------------------------------
//
// Every random draw in the library comes from a stream derived from
// (seed, role, index). Streams for different roles never interact, so adding
// or removing draws in one role cannot shift another role's sequence.

inline std::mt19937_64 make_rng(std::uint64_t seed, std::string_view role, std::uint64_t index = 0) {
  std::uint64_t h = fnv1a64(role);
  h = splitmix64(h ^ splitmix64(seed));
  h = splitmix64(h ^ (0x517CC1B727220A95ULL * (index + 1)));
  return std::mt19937_64(h);
}

inline Dense gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Dense m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Uniform Glorot initialization: entries in +-sqrt(6/(fan_in+fan_out)).
inline Dense glorot_matrix(int rows, int cols, std::mt19937_64& rng) {
  const double limit = std::sqrt(6.0 / (static_cast<double>(rows) + static_cast<double>(cols)));
  std::uniform_real_distribution<double> dist(-limit, limit);
  Dense m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline std::uint64_t hash_dense(const Dense& m, std::uint64_t h = 1469598103934665603ULL) {
  const std::int64_t r = m.rows(), c = m.cols();
  h = fnv1a64(&r, sizeof(r), h);
  h = fnv1a64(&c, sizeof(c), h);
  return fnv1a64(m.data(), sizeof(double) * static_cast<std::size_t>(m.size()), h);
}

}  // namespace advgae
