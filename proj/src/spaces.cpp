#include "bitgeom/spaces.hpp"

#include <cmath>
#include <cstdlib>

#include "bitgeom/errors.hpp"

namespace bitgeom {

NormedSpace NormedSpace::lp(double p, std::size_t dim) {
  if (!(p >= 1.0)) throw argument_error("l_p requires p >= 1");
  if (dim == 0) throw argument_error("space dimension must be >= 1");
  NormedSpace s;
  s.kind = Kind::lp;
  s.p = p;
  s.dim = dim;
  return s;
}

NormedSpace NormedSpace::weighted_lp(double p, std::vector<double> weights) {
  if (!(p >= 1.0)) throw argument_error("l_p requires p >= 1");
  if (weights.empty()) throw argument_error("weighted l_p requires at least one weight");
  for (double w : weights)
    if (!(w > 0.0)) throw argument_error("weights must be strictly positive");
  NormedSpace s;
  s.kind = Kind::weighted_lp;
  s.p = p;
  s.dim = weights.size();
  s.weights = std::move(weights);
  return s;
}

NormedSpace NormedSpace::max_of_blocks(std::vector<NormedSpace> blocks) {
  if (blocks.empty()) throw argument_error("max-of-blocks requires at least one block");
  NormedSpace s;
  s.kind = Kind::max_of_blocks;
  s.dim = 0;
  for (const auto& b : blocks) s.dim += b.dim;
  s.blocks = std::move(blocks);
  return s;
}

std::string NormedSpace::describe() const {
  switch (kind) {
    case Kind::lp:
      if (p == 1.0) return "l1:" + std::to_string(dim);
      if (p == 2.0) return "l2:" + std::to_string(dim);
      if (std::isinf(p)) return "linf:" + std::to_string(dim);
      return "lp:" + std::to_string(p) + ":" + std::to_string(dim);
    case Kind::weighted_lp:
      return "weighted-lp(" + std::to_string(p) + "):" + std::to_string(dim);
    case Kind::max_of_blocks:
      return "max-of-blocks:" + std::to_string(dim);
  }
  return "?";
}

namespace {

double lp_norm(double p, std::span<const double> v) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
  }
  if (p == 1.0) {
    double s = 0.0;
    for (double x : v) s += std::fabs(x);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double x : v) s += std::pow(std::fabs(x), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

double norm(const NormedSpace& space, std::span<const double> v) {
  if (v.size() != space.dim)
    throw argument_error("vector has dimension " + std::to_string(v.size()) +
                         " but the space expects " + std::to_string(space.dim));
  switch (space.kind) {
    case NormedSpace::Kind::lp:
      return lp_norm(space.p, v);
    case NormedSpace::Kind::weighted_lp: {
      if (std::isinf(space.p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
          m = std::max(m, space.weights[i] * std::fabs(v[i]));
        return m;
      }
      double s = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i)
        s += space.weights[i] * std::pow(std::fabs(v[i]), space.p);
      return std::pow(s, 1.0 / space.p);
    }
    case NormedSpace::Kind::max_of_blocks: {
      double m = 0.0;
      std::size_t off = 0;
      for (const auto& b : space.blocks) {
        m = std::max(m, norm(b, v.subspan(off, b.dim)));
        off += b.dim;
      }
      return m;
    }
  }
  return 0.0;
}

namespace {

void lp_norming(double p, std::span<const double> v, std::span<double> out) {
  if (std::isinf(p)) {
    // functional supported on one max coordinate
    std::size_t best = 0;
    double m = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (std::fabs(v[i]) > m) {
        m = std::fabs(v[i]);
        best = i;
      }
    if (m > 0.0) out[best] = v[best] > 0 ? 1.0 : -1.0;
    return;
  }
  if (p == 1.0) {
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = v[i] > 0 ? 1.0 : (v[i] < 0 ? -1.0 : 0.0);
    return;
  }
  double n = lp_norm(p, v);
  if (n <= 0.0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double a = std::fabs(v[i]);
    double g = a > 0.0 ? std::pow(a / n, p - 1.0) : 0.0;
    out[i] = v[i] >= 0 ? g : -g;
  }
}

}  // namespace

std::vector<double> norming_functional(const NormedSpace& space, std::span<const double> v) {
  if (v.size() != space.dim)
    throw argument_error("norming_functional: dimension mismatch");
  std::vector<double> g(space.dim, 0.0);
  switch (space.kind) {
    case NormedSpace::Kind::lp:
      lp_norming(space.p, v, g);
      break;
    case NormedSpace::Kind::weighted_lp: {
      if (std::isinf(space.p)) {
        std::size_t best = 0;
        double m = -1.0;
        for (std::size_t i = 0; i < v.size(); ++i)
          if (space.weights[i] * std::fabs(v[i]) > m) {
            m = space.weights[i] * std::fabs(v[i]);
            best = i;
          }
        if (m > 0.0) g[best] = (v[best] > 0 ? 1.0 : -1.0) * space.weights[best];
        break;
      }
      double n = norm(space, v);
      if (n <= 0.0) break;
      for (std::size_t i = 0; i < v.size(); ++i) {
        double a = std::fabs(v[i]);
        double gi = a > 0.0 ? space.weights[i] * std::pow(a, space.p - 1.0) /
                                  std::pow(n, space.p - 1.0)
                            : 0.0;
        g[i] = v[i] >= 0 ? gi : -gi;
      }
      break;
    }
    case NormedSpace::Kind::max_of_blocks: {
      // pick the achieving block; ties resolve to the first
      std::size_t off = 0, best_off = 0;
      const NormedSpace* best = nullptr;
      double m = -1.0;
      for (const auto& b : space.blocks) {
        double bn = norm(b, v.subspan(off, b.dim));
        if (bn > m) {
          m = bn;
          best = &b;
          best_off = off;
        }
        off += b.dim;
      }
      if (best && m > 0.0) {
        auto sub = norming_functional(*best, v.subspan(best_off, best->dim));
        for (std::size_t i = 0; i < best->dim; ++i) g[best_off + i] = sub[i];
      }
      break;
    }
  }
  return g;
}

void project_to_ball(const NormedSpace& space, std::vector<double>& v) {
  double n = norm(space, v);
  if (n > 1.0)
    for (double& x : v) x /= n;
}

NormedSpace parse_space_descriptor(const std::string& text) {
  auto fail = [&]() -> NormedSpace {
    throw argument_error("bad space descriptor '" + text +
                         "' (expected e.g. l1:4, l2:2, linf:3, lp:1.5:4)");
  };
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      auto pos = s.find(':', start);
      parts.push_back(s.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return parts;
  };
  auto parts = split(text);
  try {
    if (parts.size() == 2) {
      std::size_t dim = std::stoul(parts[1]);
      if (parts[0] == "l1") return NormedSpace::l1(dim);
      if (parts[0] == "l2") return NormedSpace::l2(dim);
      if (parts[0] == "linf") return NormedSpace::linf(dim);
      return fail();
    }
    if (parts.size() == 3 && parts[0] == "lp")
      return NormedSpace::lp(std::stod(parts[1]), std::stoul(parts[2]));
  } catch (const std::logic_error&) {
    return fail();
  }
  return fail();
}

}  // namespace bitgeom
