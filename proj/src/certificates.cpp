#include "bitgeom/certificates.hpp"

#include <cmath>
#include <functional>

#include "bitgeom/errors.hpp"
#include "bitgeom/metrics.hpp"

namespace bitgeom {

namespace {

constexpr double kRelTol = 1e-9;

double half_image_gap(const NormedOperator& A, const Vec& a, const Vec& b) {
  Vec da = A.apply(a);
  Vec db = A.apply(b);
  for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] - db[i]) / 2.0;
  return norm(A.codomain, da);
}

using EvalFn = std::function<Vec(const BitString&)>;

// One link of the proof chain: for vectors u, v with max norm M and image
// separation at least M * eps_delta, the midpoint satisfies
// ||u + v|| <= 2 (1 - delta) M. Evaluated, not assumed.
struct PairStep {
  double m_norm = 0.0;  // max(||u||, ||v||)
  bool first = true;    // whether ||u|| >= ||v|| decided the pick
  bool ok = true;
};

PairStep midpoint_pair_step(const NormedOperator& A, const Vec& u, const Vec& v, double delta,
                            bool prefer_first_on_tie) {
  PairStep st;
  double nu = norm(A.domain, u);
  double nv = norm(A.domain, v);
  st.m_norm = std::max(nu, nv);
  st.first = nu > nv || (nu == nv && prefer_first_on_tie);
  double mid = norm(A.domain, vec_add(u, v));
  st.ok = mid <= 2.0 * (1.0 - delta) * st.m_norm * (1.0 + kRelTol) + 1e-12;
  return st;
}

}  // namespace

MidpointChoice midpoint_selector(const Vec& x, const Vec& y, const Vec& z,
                                 const NormedOperator& A, double D,
                                 const ModulusProvider& provider) {
  if (!(D >= 1.0)) throw argument_error("midpoint_selector requires D >= 1");
  auto check_ball = [&](const Vec& v, const char* name) {
    if (v.size() != A.domain.dim)
      throw argument_error(std::string("midpoint_selector: ") + name + " has the wrong dimension");
    if (norm(A.domain, v) > 1.0 + 1e-9)
      throw argument_error(std::string("midpoint_selector: ") + name +
                           " lies outside the unit ball");
  };
  check_ball(x, "x");
  check_ball(y, "y");
  check_ball(z, "z");
  double sep = half_image_gap(A, y, z);
  if (sep < (1.0 / D) * (1.0 - 1e-9))
    throw argument_error("midpoint_selector: ||(Ay-Az)/2|| = " + std::to_string(sep) +
                         " is below the required 1/D = " + std::to_string(1.0 / D));
  MidpointChoice c;
  double ny = norm(A.domain, vec_add(x, y));
  double nz = norm(A.domain, vec_add(x, z));
  c.choice = nz < ny ? 1 : 0;
  c.min_norm = std::min(ny, nz);
  c.bound = 2.0 * (1.0 - provider.delta(1.0 / (2.0 * D)));
  c.ok = c.min_norm <= c.bound * (1.0 + kRelTol) + 1e-12;
  return c;
}

// ---------------------------------------------------------------------------
// tree claim

namespace {

struct TreeCtx {
  const Embedding* f;
  double delta;  // delta(1/2D)
  bool steps_ok = true;
};

// Selects, inside the subtree rooted at `prefix` of relative depth 2^k,
// relative leaves (t0, t1) with first bits 0 and 1 whose images stay within
// 2^k (1-delta)^k of the subtree root image. Follows the induction: split at
// relative depth 2^{k-1}, recurse, then run the three-point midpoint
// argument on the rescaled virtual depth-2 tree.
std::pair<BitString, BitString> tree_select(TreeCtx& ctx, const BitString& prefix, int k) {
  const Embedding& f = *ctx.f;
  // Midpoint argument on x = (f(mid) - f(prefix)) / scale and the two
  // candidate continuations below mid; returns the winning candidate.
  auto pick_branch = [&](const BitString& mid_abs, const BitString& cand0,
                         const BitString& cand1, double scale) {
    Vec x = vec_scaled(vec_sub(f.at(mid_abs), f.at(prefix)), 1.0 / scale);
    Vec y = vec_scaled(vec_sub(f.at(concat(mid_abs, cand0)), f.at(mid_abs)), 1.0 / scale);
    Vec z = vec_scaled(vec_sub(f.at(concat(mid_abs, cand1)), f.at(mid_abs)), 1.0 / scale);
    double ny = norm(f.space, vec_add(x, y));
    double nz = norm(f.space, vec_add(x, z));
    if (std::min(ny, nz) > 2.0 * (1.0 - ctx.delta) * (1.0 + kRelTol) + 1e-12)
      ctx.steps_ok = false;
    if (ny != nz) return ny < nz ? cand0 : cand1;
    return cand0 < cand1 ? cand0 : cand1;  // lexicographic tie-break
  };

  if (k == 1) {
    BitString zero = BitString::parse("0"), one = BitString::parse("1");
    BitString t0 = concat(zero, pick_branch(prefix.child(false), zero, one, 1.0));
    BitString t1 = concat(one, pick_branch(prefix.child(true), zero, one, 1.0));
    return {t0, t1};
  }

  auto [s0, s1] = tree_select(ctx, prefix, k - 1);
  BitString p0 = concat(prefix, s0);
  BitString p1 = concat(prefix, s1);
  auto [a0, a1] = tree_select(ctx, p0, k - 1);
  auto [b0, b1] = tree_select(ctx, p1, k - 1);
  double scale = std::pow(2.0 * (1.0 - ctx.delta), k - 1);
  return {concat(s0, pick_branch(p0, a0, a1, scale)),
          concat(s1, pick_branch(p1, b0, b1, scale))};
}

int depth_log2(std::size_t depth) {
  int k = 0;
  while ((std::size_t{1} << (k + 1)) <= depth) ++k;
  if ((std::size_t{1} << k) != depth) return -1;
  return k;
}

void require_hypothesis(const Embedding& f, const NormedOperator& A, double D) {
  auto chk = check_two_sided(f, A, D);
  if (!chk.ok)
    throw argument_error("two-sided hypothesis with D = " + std::to_string(D) +
                         " fails at pair ('" + f.graph->vertex(chk.witness.first).str() +
                         "', '" + f.graph->vertex(chk.witness.second).str() +
                         "'): " + chk.violated);
}

}  // namespace

CollapseCertificate tree_collapse_certificate(const Embedding& f, const NormedOperator& A,
                                              double D, const ModulusProvider& provider) {
  f.validate();
  if (f.graph->family() != GraphFamily::tree)
    throw argument_error("tree_collapse_certificate requires a tree embedding");
  int depth = f.graph->generation();
  int n = depth_log2(static_cast<std::size_t>(depth));
  if (depth < 2 || n < 1)
    throw argument_error("tree claim needs depth a power of two >= 2, got depth " +
                         std::to_string(depth));
  if (!(D >= 1.0)) throw argument_error("tree_collapse_certificate requires D >= 1");
  require_hypothesis(f, A, D);

  CollapseCertificate cert;
  cert.family = GraphFamily::tree;
  cert.n = n;
  cert.D = D;
  cert.delta_used = provider.delta(1.0 / (2.0 * D));
  cert.delta_provider = provider.label();

  TreeCtx ctx{&f, cert.delta_used, true};
  auto [t0, t1] = tree_select(ctx, BitString(), n);
  cert.steps_ok = ctx.steps_ok;
  cert.endpoints = {t0, t1};
  const Vec& root = f.at(BitString());
  double n0 = norm(f.space, vec_sub(f.at(t0), root));
  double n1 = norm(f.space, vec_sub(f.at(t1), root));
  cert.lhs = std::max(n0, n1);
  cert.rhs = 1.0;
  cert.bound = std::pow(2.0 * (1.0 - cert.delta_used), n);
  cert.holds = cert.lhs <= cert.bound * cert.rhs * (1.0 + kRelTol) + 1e-12;
  return cert;
}

// ---------------------------------------------------------------------------
// diamond claim

namespace {

struct BaseOutcome {
  std::pair<BitString, BitString> adjacent;
  std::pair<BitString, BitString> span;  // the pair whose gap the chain bounds
  double rhs = 0.0;                      // ||f(s) - f(s')|| of the adjacent pair
  bool ok = true;
};

// Four-vertex midpoint argument shared by the diamond base case and the
// Laakso distance-2 stage. vb-vl and vb-vr are the lower pairs, vl-vt and
// vr-vt the upper ones; the returned pair realizes the largest difference
// norm among the four.
BaseOutcome four_point_base(const NormedOperator& A, const EvalFn& eval, double delta,
                            const BitString& vb, const BitString& vl, const BitString& vr,
                            const BitString& vt, bool* steps_ok) {
  Vec fb = eval(vb), fl = eval(vl), fr = eval(vr), ft = eval(vt);
  Vec u = vec_sub(fl, fb);
  Vec v = vec_sub(fr, fb);
  Vec w = vec_sub(ft, fl);
  Vec x = vec_sub(ft, fr);
  bool l_first = vl < vr;  // lexicographic preference on ties
  PairStep lower = midpoint_pair_step(A, u, v, delta, l_first);
  PairStep upper = midpoint_pair_step(A, w, x, delta, l_first);
  if (!lower.ok || !upper.ok) *steps_ok = false;

  BaseOutcome out;
  auto lower_pair = lower.first ? std::make_pair(vb, vl) : std::make_pair(vb, vr);
  auto upper_pair = upper.first ? std::make_pair(vl, vt) : std::make_pair(vr, vt);
  if (lower.m_norm >= upper.m_norm) {
    out.adjacent = lower_pair;
    out.rhs = lower.m_norm;
  } else {
    out.adjacent = upper_pair;
    out.rhs = upper.m_norm;
  }
  out.span = {vb, vt};
  return out;
}

// Replaces the doubled block at coordinates (2j, 2j+1) of `base` with the
// given two-bit pattern.
BitString with_block2(const BitString& base, std::size_t j, char b0, char b1) {
  std::string s = base.str();
  s[2 * j] = b0;
  s[2 * j + 1] = b1;
  return BitString::parse(s);
}

BaseOutcome diamond_select(const NormedOperator& A, const EvalFn& eval, int m, double delta,
                           bool* steps_ok) {
  if (m == 1) {
    return four_point_base(A, eval, delta, BitString::parse("00"), BitString::parse("01"),
                           BitString::parse("10"), BitString::parse("11"), steps_ok);
  }
  EvalFn sub = [&eval](const BitString& s) { return vec_scaled(eval(doubling(s)), 0.5); };
  BaseOutcome inner = diamond_select(A, sub, m - 1, delta, steps_ok);
  const BitString& a = inner.adjacent.first;
  const BitString& b = inner.adjacent.second;
  std::size_t j = 0;
  while (j < a.size() && a.str()[j] == b.str()[j]) ++j;
  const BitString& lo = a.str()[j] == '0' ? a : b;
  BitString common = doubling(lo);
  // the four vertices lying pointwise between the doubled pair form a copy
  // of the first diamond
  return four_point_base(A, eval, delta, with_block2(common, j, '0', '0'),
                         with_block2(common, j, '0', '1'), with_block2(common, j, '1', '0'),
                         with_block2(common, j, '1', '1'), steps_ok);
}

}  // namespace

CollapseCertificate diamond_collapse_certificate(const Embedding& f, const NormedOperator& A,
                                                 double D, const ModulusProvider& provider) {
  f.validate();
  if (f.graph->family() != GraphFamily::diamond)
    throw argument_error("diamond_collapse_certificate requires a diamond embedding");
  int n = f.graph->generation();
  if (!(D >= 1.0)) throw argument_error("diamond_collapse_certificate requires D >= 1");
  require_hypothesis(f, A, D);

  CollapseCertificate cert;
  cert.family = GraphFamily::diamond;
  cert.n = n;
  cert.D = D;
  cert.delta_used = provider.delta(1.0 / D);
  cert.delta_provider = provider.label();

  std::size_t len = f.graph->vertex(0).size();
  BitString bottom = BitString::from_value(0, len);
  BitString top = BitString::parse(std::string(len, '1'));
  cert.endpoints = {top, bottom};
  cert.lhs = norm(f.space, vec_sub(f.at(top), f.at(bottom)));
  cert.bound = std::pow(2.0 * (1.0 - cert.delta_used), n);

  if (n == 0) {
    // single edge: the endpoints are themselves adjacent
    cert.adjacent_pair = {{bottom, top}};
    cert.rhs = cert.lhs;
    cert.holds = cert.lhs <= cert.bound * cert.rhs * (1.0 + kRelTol) + 1e-12;
    return cert;
  }

  EvalFn eval = [&f](const BitString& s) { return f.at(s); };
  bool steps_ok = true;
  BaseOutcome out = diamond_select(A, eval, n, cert.delta_used, &steps_ok);
  cert.steps_ok = steps_ok;
  cert.adjacent_pair = out.adjacent;
  cert.rhs = norm(f.space, vec_sub(f.at(out.adjacent.first), f.at(out.adjacent.second)));
  cert.holds = cert.lhs <= cert.bound * cert.rhs * (1.0 + kRelTol) + 1e-12;
  return cert;
}

// ---------------------------------------------------------------------------
// laakso claim

namespace {

struct LaaksoOutcome {
  std::pair<BitString, BitString> adjacent;
  std::optional<std::pair<BitString, BitString>> distance2;
  bool ok = true;
};

BitString with_block4(const BitString& lo_quad, std::size_t j, const char* pattern) {
  std::string s = lo_quad.str();
  for (int k = 0; k < 4; ++k) s[4 * j + k] = pattern[k];
  return BitString::parse(s);
}

// Base stage on one gadget copy: labels(pattern) materializes the vertex
// carrying the given middle-block pattern.
LaaksoOutcome laakso_base(const NormedOperator& A, const EvalFn& eval, double delta,
                          const std::function<BitString(const char*)>& label, bool* steps_ok) {
  BitString vb = label("0000");
  BitString vP = label("1100");
  BitString vQ = label("0101");
  BitString vt = label("1111");
  BaseOutcome four = four_point_base(A, eval, delta, vb, vP, vQ, vt, steps_ok);

  const auto& [t, t2] = four.adjacent;  // distance-2 pair in the gadget
  // the unique vertex between them: lower pairs route through the 0100 row,
  // upper pairs through the 1101 row
  bool lower_pair = t == vb || t2 == vb;
  BitString mid = label(lower_pair ? "0100" : "1101");

  Vec fm = eval(mid);
  double first_half = norm(A.domain, vec_sub(eval(t), fm));
  double second_half = norm(A.domain, vec_sub(fm, eval(t2)));
  LaaksoOutcome out;
  out.distance2 = four.adjacent;
  if (first_half > second_half)
    out.adjacent = {t, mid};
  else if (second_half > first_half)
    out.adjacent = {mid, t2};
  else
    out.adjacent = std::min(std::make_pair(t, mid), std::make_pair(mid, t2));
  return out;
}

LaaksoOutcome laakso_select(const NormedOperator& A, const EvalFn& eval, int m, double delta,
                            bool* steps_ok) {
  if (m == 1) {
    auto label = [](const char* pattern) { return BitString::parse(pattern); };
    return laakso_base(A, eval, delta, label, steps_ok);
  }
  EvalFn sub = [&eval](const BitString& s) { return vec_scaled(eval(quadrupling(s)), 0.25); };
  LaaksoOutcome inner = laakso_select(A, sub, m - 1, delta, steps_ok);
  const BitString& a = inner.adjacent.first;
  const BitString& b = inner.adjacent.second;
  std::size_t j = 0;
  while (j < a.size() && a.str()[j] == b.str()[j]) ++j;
  const BitString& lo = a.str()[j] == '0' ? a : b;
  BitString lo_quad = quadrupling(lo);
  auto label = [&lo_quad, j](const char* pattern) { return with_block4(lo_quad, j, pattern); };
  return laakso_base(A, eval, delta, label, steps_ok);
}

}  // namespace

CollapseCertificate laakso_collapse_certificate(const Embedding& f, const NormedOperator& A,
                                                double D, const ModulusProvider& provider) {
  f.validate();
  if (f.graph->family() != GraphFamily::laakso)
    throw argument_error("laakso_collapse_certificate requires a Laakso embedding");
  int n = f.graph->generation();
  if (!(D >= 1.0)) throw argument_error("laakso_collapse_certificate requires D >= 1");
  require_hypothesis(f, A, D);

  CollapseCertificate cert;
  cert.family = GraphFamily::laakso;
  cert.n = n;
  cert.D = D;
  cert.delta_used = provider.delta(1.0 / D);
  cert.delta_provider = provider.label();

  std::size_t len = f.graph->vertex(0).size();
  BitString bottom = BitString::from_value(0, len);
  BitString top = BitString::parse(std::string(len, '1'));
  cert.endpoints = {top, bottom};
  cert.lhs = norm(f.space, vec_sub(f.at(top), f.at(bottom)));
  cert.bound = std::pow(4.0 * (1.0 - cert.delta_used), n);

  if (n == 0) {
    cert.adjacent_pair = {{bottom, top}};
    cert.rhs = cert.lhs;
    cert.holds = cert.lhs <= cert.bound * cert.rhs * (1.0 + kRelTol) + 1e-12;
    return cert;
  }

  EvalFn eval = [&f](const BitString& s) { return f.at(s); };
  bool steps_ok = true;
  LaaksoOutcome out = laakso_select(A, eval, n, cert.delta_used, &steps_ok);
  cert.steps_ok = steps_ok;
  cert.adjacent_pair = out.adjacent;
  cert.distance2_pair = out.distance2;
  cert.rhs = norm(f.space, vec_sub(f.at(out.adjacent.first), f.at(out.adjacent.second)));
  cert.holds = cert.lhs <= cert.bound * cert.rhs * (1.0 + kRelTol) + 1e-12;
  return cert;
}

}  // namespace bitgeom
