#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace bitgeom {

// Finite-dimensional normed space: plain l_p, weighted l_p, or a max-direct
// sum of blocks. p = infinity is encoded as std::numeric_limits infinity.
struct NormedSpace {
  enum class Kind { lp, weighted_lp, max_of_blocks };

  Kind kind = Kind::lp;
  double p = 2.0;
  std::size_t dim = 0;
  std::vector<double> weights;       // weighted_lp only; strictly positive
  std::vector<NormedSpace> blocks;   // max_of_blocks only

  static NormedSpace lp(double p, std::size_t dim);
  static NormedSpace l1(std::size_t dim) { return lp(1.0, dim); }
  static NormedSpace l2(std::size_t dim) { return lp(2.0, dim); }
  static NormedSpace linf(std::size_t dim) {
    return lp(std::numeric_limits<double>::infinity(), dim);
  }
  static NormedSpace weighted_lp(double p, std::vector<double> weights);
  static NormedSpace max_of_blocks(std::vector<NormedSpace> blocks);

  bool is_simple_lp() const { return kind == Kind::lp; }
  std::string describe() const;
};

// Exact for l_p; argument_error on dimension mismatch.
double norm(const NormedSpace& space, std::span<const double> v);

// A norming functional (subgradient of the norm) at v: a vector g with
// <g, v> = ||v|| and dual norm at most 1. Returns zeros at v = 0.
std::vector<double> norming_functional(const NormedSpace& space, std::span<const double> v);

// v / max(1, ||v||): radial projection onto the unit ball.
void project_to_ball(const NormedSpace& space, std::vector<double>& v);

// Parses compact descriptors like "l1:4", "l2:2", "linf:3", "lp:1.5:4".
NormedSpace parse_space_descriptor(const std::string& text);

}  // namespace bitgeom
