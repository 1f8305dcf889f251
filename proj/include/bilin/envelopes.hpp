#pragma once

#include <map>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "bilin/graph.hpp"

namespace bilin {

/// A point x in [0,1]^n together with its index partition
/// T_0 = {x_i = 0}, T_f = {0 < x_i < 1}, T_1 = {x_i = 1}.
class EvaluationPoint {
 public:
  /// Throws InputError if a coordinate is outside [0,1] or not finite.
  explicit EvaluationPoint(Eigen::VectorXd coords);

  static EvaluationPoint all_half(int n);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Eigen::VectorXd& coords() const { return coords_; }
  /// 1-based coordinate access.
  double at(int vertex) const { return coords_(vertex - 1); }

  VertexSubset zeros() const { return zeros_; }
  VertexSubset fractional() const { return fractional_; }
  VertexSubset ones() const { return ones_; }

  /// True iff every coordinate is exactly 0, 0.5 or 1.
  bool is_half_point() const { return half_point_; }

 private:
  Eigen::VectorXd coords_;
  VertexSubset zeros_, fractional_, ones_;
  bool half_point_ = true;
};

/// b(x) = sum a_ij x_i x_j.
double evaluate_bilinear(const SignedWeightedGraph& g, const EvaluationPoint& x);

struct McCormickBounds {
  double mcu = 0.0;
  double mcl = 0.0;
  double gap() const { return mcu - mcl; }
};

/// Upper and lower McCormick envelopes. Every y_ij sits in its own
/// constraint block, so the optimum over Q separates edge by edge:
/// y_ij ranges over [max(0, x_i + x_j - 1), min(x_i, x_j)].
McCormickBounds mccormick_envelopes(const SignedWeightedGraph& g, const EvaluationPoint& x);

/// mcgap at a half-point: half the |a|-weight inside T_f.
double mcgap_halfpoint(const SignedWeightedGraph& g, const EvaluationPoint& x);

struct HullBounds {
  double cav = 0.0;
  double vex = 0.0;
  double gap() const { return cav - vex; }
};

/// Default cap on |T_f| for the hull LP (2^16 columns).
inline constexpr int kDefaultLpCap = 16;

/// Concave and convex envelopes by linear programming over convex
/// combinations of hypercube vertices. Vertices disagreeing with a binary
/// coordinate of x must carry zero weight, so only the 2^|T_f| vertices that
/// match x on T_0 ∪ T_1 enter the LP. Throws CapacityError if |T_f| > lp_cap.
HullBounds hull_envelopes_lp(const SignedWeightedGraph& g, const EvaluationPoint& x, int lp_cap = kDefaultLpCap);

struct HalfPointEnvelopes {
  double cav = 0.0;
  double vex = 0.0;
  double chgap = 0.0;
};

/// Closed-form envelopes at a half-point given the exact extreme cut values
/// mu^+(T_f), mu^-(T_f) of the subgraph induced by T_f:
///   vex = a(γ(T_1)) + ½a(δ(T_1,T_f)) + ½a(γ(T_f)) − ½mu^+
///   cav = a(γ(T_1)) + ½a(δ(T_1,T_f)) + ½a(γ(T_f)) − ½mu^-
HalfPointEnvelopes envelopes_halfpoint(const SignedWeightedGraph& g, const EvaluationPoint& x, double mu_plus,
                                       double mu_minus);

enum class EnvelopeSide { lower, upper };

std::string_view to_string(EnvelopeSide side);

/// Dual solution (y, z) of the LP behind vex (lower) or cav (upper) at a
/// half-point, restricted to T_f.
struct DualCertificate {
  double y = 0.0;
  std::map<int, double> z;  // vertex -> z_i over T_f
  EnvelopeSide side = EnvelopeSide::lower;

  double objective() const;
};

/// Thrown when a dual certificate is infeasible; carries a violating X ⊆ T_f.
class CertificateError : public InputError {
 public:
  CertificateError(const std::string& what, VertexSubset violating) : InputError(what), violating_(violating) {}
  VertexSubset violating_set() const { return violating_; }

 private:
  VertexSubset violating_;
};

/// First X ⊆ T_f (in Gray-code order) violating the certificate's side
/// constraint y + sum_{i in X} z_i <= a(γ(X)) (lower) or >= (upper).
std::optional<VertexSubset> find_certificate_violation(const SignedWeightedGraph& g, VertexSubset t_f,
                                                       const DualCertificate& cert, double tolerance = 1e-9);

/// Builds y = -mu/2, z_i = ½ sum_{j in T_f} a_ij and checks feasibility over
/// every X ⊆ T_f. mu is mu^+(T_f) for the lower side, mu^-(T_f) for the upper.
/// Throws CertificateError with the violating set when infeasible.
DualCertificate dual_certificate(const SignedWeightedGraph& g, VertexSubset t_f, double mu, EnvelopeSide side);

enum class GapMethod { closed_form, lp };

std::string_view to_string(GapMethod method);

struct GapReport {
  EvaluationPoint point;
  double mcu = 0.0, mcl = 0.0, cav = 0.0, vex = 0.0;
  double mcgap = 0.0, chgap = 0.0;
  double ratio = 1.0;          // mcgap / chgap
  bool ratio_infinite = false; // chgap = 0 < mcgap
  bool degenerate = false;     // chgap = mcgap = 0, ratio reported as 1
  GapMethod method = GapMethod::closed_form;
};

struct GapOptions {
  int lp_cap = kDefaultLpCap;
};

/// Envelopes, gaps and their ratio at one point. Half-points use the closed
/// forms with exact cut enumeration on T_f; other points solve the hull LP.
GapReport gap_report(const SignedWeightedGraph& g, const EvaluationPoint& x, const GapOptions& options = {});

}  // namespace bilin
