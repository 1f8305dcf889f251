#include "bilin/envelopes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "bilin/cuts.hpp"
#include "bilin/simplex.hpp"

namespace bilin {

EvaluationPoint::EvaluationPoint(Eigen::VectorXd coords) : coords_(std::move(coords)) {
  if (coords_.size() > kMaxVertices) throw CapacityError("point dimension exceeds 63");
  for (int v = 1; v <= dim(); ++v) {
    const double c = coords_(v - 1);
    if (!std::isfinite(c) || c < 0.0 || c > 1.0) {
      throw InputError("coordinate " + std::to_string(v) + " = " + std::to_string(c) + " is outside [0,1]");
    }
    if (c == 0.0) {
      zeros_.insert(v);
    } else if (c == 1.0) {
      ones_.insert(v);
    } else {
      fractional_.insert(v);
      if (c != 0.5) half_point_ = false;
    }
  }
}

EvaluationPoint EvaluationPoint::all_half(int n) { return EvaluationPoint(Eigen::VectorXd::Constant(n, 0.5)); }

namespace {

void require_dim(const SignedWeightedGraph& g, const EvaluationPoint& x) {
  if (x.dim() != g.n()) {
    throw InputError("point has dimension " + std::to_string(x.dim()) + " but graph has n=" + std::to_string(g.n()));
  }
}

void require_half_point(const EvaluationPoint& x) {
  if (!x.is_half_point()) {
    throw InputError("closed forms need a point in {0, 1/2, 1}^n; use the LP or McCormick routines elsewhere");
  }
}

double gap_tolerance(const SignedWeightedGraph& g) { return 1e-9 * std::max(1.0, g.total_abs_weight()); }

}  // namespace

double evaluate_bilinear(const SignedWeightedGraph& g, const EvaluationPoint& x) {
  require_dim(g, x);
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += e.a * x.at(e.i) * x.at(e.j);
  return sum;
}

McCormickBounds mccormick_envelopes(const SignedWeightedGraph& g, const EvaluationPoint& x) {
  require_dim(g, x);
  McCormickBounds out;
  for (const Edge& e : g.edges()) {
    const double xi = x.at(e.i), xj = x.at(e.j);
    const double hi = std::min(xi, xj);
    const double lo = std::max(0.0, xi + xj - 1.0);
    if (e.a > 0) {
      out.mcu += e.a * hi;
      out.mcl += e.a * lo;
    } else {
      out.mcu += e.a * lo;
      out.mcl += e.a * hi;
    }
  }
  return out;
}

double mcgap_halfpoint(const SignedWeightedGraph& g, const EvaluationPoint& x) {
  require_dim(g, x);
  require_half_point(x);
  return 0.5 * gamma_abs_weight(g, x.fractional());
}

HullBounds hull_envelopes_lp(const SignedWeightedGraph& g, const EvaluationPoint& x, int lp_cap) {
  require_dim(g, x);
  const std::vector<int> frac = x.fractional().members();
  const int m = static_cast<int>(frac.size());
  if (m > lp_cap) {
    throw CapacityError("hull LP over " + std::to_string(m) + " fractional coordinates exceeds cap " +
                        std::to_string(lp_cap));
  }
  const VertexSubset ones = x.ones();
  const double base = gamma_weight(g, ones);
  if (m == 0) return {base, base};

  const Eigen::MatrixXd& a = g.weight_matrix();
  const Eigen::Index cols = Eigen::Index{1} << m;

  // Coupling of each fractional vertex with T_1.
  std::vector<double> to_ones(static_cast<std::size_t>(m), 0.0);
  for (int q = 0; q < m; ++q) {
    for (int w : ones.members()) to_ones[static_cast<std::size_t>(q)] += a(frac[q] - 1, w - 1);
  }

  // value(c) = b at the vertex equal to 1 on T_1 ∪ {frac[q] : bit q of c}.
  Eigen::VectorXd value(cols);
  value(0) = base;
  Eigen::MatrixXd constraints(m + 1, cols);
  constraints.row(0).setOnes();
  for (Eigen::Index c = 0; c < cols; ++c) {
    const auto cu = static_cast<std::uint64_t>(c);
    for (int q = 0; q < m; ++q) constraints(q + 1, c) = static_cast<double>((cu >> q) & 1U);
    if (c == 0) continue;
    const int low = std::countr_zero(cu);
    const std::uint64_t prev = cu & (cu - 1);
    double add = to_ones[static_cast<std::size_t>(low)];
    for (std::uint64_t r = prev; r != 0; r &= r - 1) add += a(frac[low] - 1, frac[std::countr_zero(r)] - 1);
    value(c) = value(static_cast<Eigen::Index>(prev)) + add;
  }

  Eigen::VectorXd rhs(m + 1);
  rhs(0) = 1.0;
  for (int q = 0; q < m; ++q) rhs(q + 1) = x.at(frac[q]);

  // Staircase basis: sort fractional coordinates in decreasing order and take
  // the chain of vertices ∅ ⊂ {σ1} ⊂ {σ1,σ2} ⊂ ... . Weights are the
  // successive coordinate differences, all nonnegative.
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return rhs(l + 1) > rhs(r + 1); });
  std::vector<Eigen::Index> basis{0};
  Eigen::Index chain = 0;
  for (int q : order) {
    chain |= Eigen::Index{1} << q;
    basis.push_back(chain);
  }

  const DenseSimplex<double> lp(std::move(constraints), std::move(rhs));
  const double vex = lp.minimize(value, basis).objective;
  const double cav = lp.maximize(value, basis).objective;
  return {cav, vex};
}

HalfPointEnvelopes envelopes_halfpoint(const SignedWeightedGraph& g, const EvaluationPoint& x, double mu_plus,
                                       double mu_minus) {
  require_dim(g, x);
  require_half_point(x);
  const VertexSubset t1 = x.ones(), tf = x.fractional();
  const double common = gamma_weight(g, t1) + 0.5 * between_weight(g, t1, tf) + 0.5 * gamma_weight(g, tf);
  return {common - 0.5 * mu_minus, common - 0.5 * mu_plus, 0.5 * (mu_plus - mu_minus)};
}

std::string_view to_string(EnvelopeSide side) { return side == EnvelopeSide::lower ? "lower_envelope" : "upper_envelope"; }

double DualCertificate::objective() const {
  double sum = 0.0;
  for (const auto& [v, zi] : z) sum += zi;
  return y + 0.5 * sum;
}

std::optional<VertexSubset> find_certificate_violation(const SignedWeightedGraph& g, VertexSubset t_f,
                                                       const DualCertificate& cert, double tolerance) {
  require_vertices(g, t_f);
  const int k = t_f.size();
  if (k > kMaxEnumerationSize) throw CapacityError("certificate check limited to 26 vertices");
  const std::vector<int> members = t_f.members();
  std::vector<double> z(members.size(), 0.0);
  for (std::size_t p = 0; p < members.size(); ++p) {
    auto it = cert.z.find(members[p]);
    if (it != cert.z.end()) z[p] = it->second;
  }
  const double scale = tolerance * std::max(1.0, gamma_abs_weight(g, t_f));

  auto violates = [&](double lhs, double rhs) {
    return cert.side == EnvelopeSide::lower ? lhs > rhs + scale : lhs < rhs - scale;
  };

  // Gray-code walk over X ⊆ T_f tracking a(γ(X)) and sum_{i in X} z_i.
  std::vector<char> in_x(members.size(), 0);
  std::uint64_t mask = 0;
  double gamma = 0.0, zsum = 0.0;
  if (violates(cert.y, 0.0)) return VertexSubset{};
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t s = 1; s < count; ++s) {
    const auto p = static_cast<std::size_t>(std::countr_zero(s));
    double link = 0.0;
    for (std::size_t q = 0; q < members.size(); ++q) {
      if (in_x[q]) link += g.weight(members[p], members[q]);
    }
    if (in_x[p]) {
      in_x[p] = 0;
      gamma -= link;
      zsum -= z[p];
    } else {
      in_x[p] = 1;
      gamma += link;
      zsum += z[p];
    }
    mask ^= std::uint64_t{1} << (members[p] - 1);
    if (violates(cert.y + zsum, gamma)) return VertexSubset(mask);
  }
  return std::nullopt;
}

DualCertificate dual_certificate(const SignedWeightedGraph& g, VertexSubset t_f, double mu, EnvelopeSide side) {
  require_vertices(g, t_f);
  DualCertificate cert;
  cert.side = side;
  cert.y = -0.5 * mu;
  for (int i : t_f.members()) {
    double row = 0.0;
    for (int j : t_f.members()) row += g.weight(i, j);
    cert.z[i] = 0.5 * row;
  }
  if (auto bad = find_certificate_violation(g, t_f, cert)) {
    std::string members;
    for (int v : bad->members()) members += (members.empty() ? "" : ",") + std::to_string(v);
    throw CertificateError(std::string(to_string(side)) + " certificate infeasible at X={" + members + "}", *bad);
  }
  return cert;
}

std::string_view to_string(GapMethod method) { return method == GapMethod::closed_form ? "closed_form" : "lp"; }

GapReport gap_report(const SignedWeightedGraph& g, const EvaluationPoint& x, const GapOptions& options) {
  require_dim(g, x);
  GapReport report{.point = x};
  const McCormickBounds mc = mccormick_envelopes(g, x);
  report.mcu = mc.mcu;
  report.mcl = mc.mcl;

  if (x.is_half_point()) {
    const CutExtremes ext = cut_extremes(g, x.fractional());
    const HalfPointEnvelopes hp = envelopes_halfpoint(g, x, ext.max.value, ext.min.value);
    report.cav = hp.cav;
    report.vex = hp.vex;
    report.method = GapMethod::closed_form;
  } else {
    const HullBounds hb = hull_envelopes_lp(g, x, options.lp_cap);
    report.cav = hb.cav;
    report.vex = hb.vex;
    report.method = GapMethod::lp;
  }
  report.mcgap = report.mcu - report.mcl;
  report.chgap = report.cav - report.vex;

  const double tol = gap_tolerance(g);
  if (report.chgap > tol) {
    report.ratio = report.mcgap / report.chgap;
  } else if (report.mcgap > tol) {
    report.ratio = std::numeric_limits<double>::infinity();
    report.ratio_infinite = true;
  } else {
    report.ratio = 1.0;
    report.degenerate = true;
  }
  return report;
}

}  // namespace bilin
