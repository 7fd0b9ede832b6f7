#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace sear {

// Point / displacement in R^k, k in {2,3}. z stays 0 for planar work.
struct Vec {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec() = default;
  Vec(double x_, double y_) : x(x_), y(y_) {}
  Vec(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec operator+(const Vec& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec operator-(const Vec& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec& operator+=(const Vec& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  bool operator==(const Vec& o) const { return x == o.x && y == o.y && z == o.z; }

  double dot(const Vec& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm_sq() const { return dot(*this); }
  double norm() const { return std::sqrt(norm_sq()); }
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

inline double distance(const Vec& a, const Vec& b) { return (a - b).norm(); }
inline double distance_sq(const Vec& a, const Vec& b) { return (a - b).norm_sq(); }

inline bool almost_equal(double a, double b, double eps = 1e-9) {
  return std::abs(a - b) <= eps;
}
inline bool almost_equal(const Vec& a, const Vec& b, double eps = 1e-9) {
  return distance(a, b) <= eps;
}

// Seeded RNG with implementation-independent output. mt19937_64 is fully
// specified by the standard; the distribution helpers below avoid
// std::uniform_real_distribution and friends, whose output is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t v = gen_();
      if (v >= threshold) return v % n;
    }
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  // Uniform point in the ball of given radius, centered at the origin.
  Vec in_ball(double radius, int dimension) {
    if (dimension == 2) {
      double r = radius * std::sqrt(uniform());
      double theta = uniform(0.0, 2.0 * M_PI);
      return {r * std::cos(theta), r * std::sin(theta)};
    }
    double r = radius * std::cbrt(uniform());
    Vec dir{gaussian(), gaussian(), gaussian()};
    double n = dir.norm();
    if (n == 0.0) return in_ball(radius, dimension);
    return dir * (r / n);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sear
