#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bitgeom/embeddings.hpp"
#include "bitgeom/modulus.hpp"
#include "bitgeom/report.hpp"

namespace bitgeom {

struct MidpointChoice {
  int choice = 0;         // 0 selects y, 1 selects z
  double min_norm = 0.0;  // min(||x+y||, ||x+z||)
  double bound = 0.0;     // 2 (1 - delta(1/2D))
  bool ok = true;         // min_norm <= bound up to float slack
};

// Requires x, y, z in the unit ball and ||(Ay - Az)/2|| >= 1/D; then one of
// ||x + y||, ||x + z|| is at most 2 (1 - delta(1/2D)). Returns the smaller
// side (y on ties) and verifies the bound. Precondition violations raise
// argument_error naming the failed hypothesis.
MidpointChoice midpoint_selector(const Vec& x, const Vec& y, const Vec& z,
                                 const NormedOperator& A, double D,
                                 const ModulusProvider& provider);

// Constructive output of the endpoint-collapse inductions: a distinguished
// endpoint pair whose images contract by (1 - delta)^n relative to some
// adjacent pair. The inequality lhs <= bound * rhs, exactly as evaluated,
// is the certificate.
struct CollapseCertificate {
  GraphFamily family = GraphFamily::custom;
  int n = 0;
  std::pair<BitString, BitString> endpoints;
  std::optional<std::pair<BitString, BitString>> adjacent_pair;   // absent for trees
  std::optional<std::pair<BitString, BitString>> distance2_pair;  // laakso base step
  double D = 1.0;
  double delta_used = 0.0;
  std::string delta_provider;
  double bound = 0.0;
  double lhs = 0.0;
  double rhs = 1.0;
  bool holds = false;    // lhs <= bound * rhs with 1e-9 relative slack
  bool steps_ok = true;  // every intermediate midpoint inequality held
};

// Tree claim on the depth-2^n tree: leaves t_0 (first bit 0) and t_1 (first
// bit 1) with ||f(t_i) - f(root)|| <= 2^n (1-delta)^n, delta = delta(1/2D).
// The embedding must satisfy the two-sided hypothesis with constant D.
CollapseCertificate tree_collapse_certificate(const Embedding& f, const NormedOperator& A,
                                              double D, const ModulusProvider& provider);

// Diamond claim: adjacent s, s' with
// ||f(top) - f(bottom)|| <= 2^n (1-delta)^n ||f(s) - f(s')||, delta = delta(1/D).
CollapseCertificate diamond_collapse_certificate(const Embedding& f, const NormedOperator& A,
                                                 double D, const ModulusProvider& provider);

// Laakso claim: adjacent s, s' with
// ||f(1...1) - f(0...0)|| <= 4^n (1-delta)^n ||f(s) - f(s')||, delta = delta(1/D).
CollapseCertificate laakso_collapse_certificate(const Embedding& f, const NormedOperator& A,
                                                double D, const ModulusProvider& provider);

}  // namespace bitgeom
