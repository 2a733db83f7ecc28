#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace blockdial {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Time-invariant linear MPC problem data:
///   min  sum_t 1/2 [x_t' u_t'] [Q W; W' R] [x_t; u_t] + 1/2 x_N' QN x_N
///   s.t. x_0 = x0,  x_{t+1} = A x_t + B u_t,
///        Hx x_t + Hu u_t + h <= 0,  HxN x_N + hN <= 0.
struct LtiMpcProblem {
  int n = 0;   // state dimension
  int m = 0;   // input dimension
  int c = 0;   // stage constraint rows
  int cN = 0;  // terminal constraint rows
  int N = 0;   // prediction horizon

  Matrix A, B;
  Matrix Q, R, W, QN;
  Matrix Hx, Hu, HxN;
  Vector h, hN;
  Vector x0;
};

/// One stage of a general (time-varying) horizon problem. Input and
/// constraint dimensions may differ per stage; the state dimension is
/// shared across the whole horizon.
struct Stage {
  Matrix A;   // n x n
  Matrix B;   // n x m_k
  Matrix Q;   // n x n
  Matrix R;   // m_k x m_k
  Matrix W;   // n x m_k cross penalty
  Vector q;   // linear state cost
  Vector r;   // linear input cost
  Matrix Hx;  // c_k x n
  Matrix Hu;  // c_k x m_k
  Vector h;   // c_k

  int n() const { return static_cast<int>(A.rows()); }
  int m() const { return static_cast<int>(B.cols()); }
  int c() const { return static_cast<int>(Hx.rows()); }
};

/// Horizon problem over stages 0..Ntilde-1 plus terminal data.
struct StageMpcProblem {
  Vector x0;
  std::vector<Stage> stages;
  Matrix QN;
  Vector qN;
  Matrix HxN;
  Vector hN;

  int horizon() const { return static_cast<int>(stages.size()); }
  int n() const { return static_cast<int>(x0.size()); }
};

/// Block-size plan for the reformulations.
struct PartitionSpec {
  enum class Kind { condense, split, combined };

  Kind kind = Kind::condense;
  std::vector<int> intervals;  // condense: lengths M_k, sum = N
  int M_split = 1;             // split / combined
  int M_cond = 1;              // combined

  static PartitionSpec condense(std::vector<int> intervals);
  static PartitionSpec condense_uniform(int M, int N);
  static PartitionSpec split(int M);
  static PartitionSpec combined(int M_split, int M_cond);
};

/// State/input trajectories with optional costates.
struct Solution {
  std::vector<Vector> x;       // Ntilde + 1
  std::vector<Vector> u;       // Ntilde
  std::vector<Vector> lambda;  // Ntilde + 1, may be empty
  double objective = 0.0;
  double kkt_residual = -1.0;  // < 0 when not computed

  bool has_costates() const { return !lambda.empty(); }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

/// Checks symmetry, R positive definite, joint penalty [Q W; W' R]
/// positive semidefinite and dimension consistency. Reports violations
/// instead of throwing.
ValidationReport validate_problem(const LtiMpcProblem& p);
ValidationReport validate_problem(const StageMpcProblem& p);

/// Rewrites the problem with W = 0 via v = u + R^{-1} W' x:
///   A' = A - B R^{-1} W',  Q' = Q - W R^{-1} W',  Hx' = Hx - Hu R^{-1} W'.
/// The optimal value is unchanged and u recovers as v - R^{-1} W' x.
LtiMpcProblem eliminate_cross_terms(const LtiMpcProblem& p);

/// Maps an optimum of eliminate_cross_terms(p) back to inputs of p.
Solution recover_cross_term_solution(const LtiMpcProblem& p, const Solution& transformed);

struct RandomProblemOptions {
  bool diagonal_R = false;  // diagonal R, needed for control splitting
};

/// Deterministic test-problem generator. A is scaled to spectral radius
/// 0.9, Q = C'C, R = D'D + 0.1 I (or diagonal), W = 0, QN = Q, and up to
/// c rows of |x_i| <= 10 / |u_j| <= 10 box constraints in separable form.
LtiMpcProblem random_problem(int n, int m, int N, int c, std::uint64_t seed,
                             const RandomProblemOptions& opts = {});

/// Per-stage copy of an LTI problem (M_k = 1 structure).
StageMpcProblem lift_to_stage(const LtiMpcProblem& p);

/// Exact quadratic objective including linear terms.
double evaluate_objective(const StageMpcProblem& p, const Solution& s);

/// True iff all inequality rows are <= tol and the dynamics (including
/// the initial condition) hold to tol in max norm.
bool feasibility_check(const StageMpcProblem& p, const Solution& s, double tol);

/// Max-abs entry over all problem data, used to scale residual tests.
double data_inf_norm(const StageMpcProblem& p);

/// Positive divisors in ascending order.
std::vector<int> divisors(int v);

}  // namespace blockdial
