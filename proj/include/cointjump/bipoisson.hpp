#pragma once

// The dependent bivariate Poisson pair (N1, N2). Inter-arrival times of N2
// are built from those of N1 through the self-decomposable split
// X = a Y + B Z of the exponential law, which couples *when* the two
// processes jump, not just how often. gamma = a*lambda1/lambda2 controls the
// regime: gamma >= 1 forces N2(t) <= N1(t) pathwise.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <cointjump/rng.hpp>

namespace cointjump::bipoisson {

struct DependenceParams {
    double lambda1;  // intensity of N1 (events / year)
    double lambda2;  // intensity of N2
    double a;        // self-decomposability weight in [0,1]; also the
                     // correlation of the coupled exponentials

    DependenceParams(double lambda1, double lambda2, double a);

    double gamma() const { return a * lambda1 / lambda2; }
};

enum class DependenceKind { independent, common, cointegrated };

/// Truncated joint law P{N1(t)=m, N2(t)=n}, row-major over m.
struct JointPmf {
    double t = 0.0;
    int m_max = 0;
    int n_max = 0;
    std::vector<double> probs;  // (m_max+1) x (n_max+1)
    double tail_mass = 0.0;

    double at(int m, int n) const { return probs[static_cast<std::size_t>(m) * (n_max + 1) + n]; }
    double& at(int m, int n) { return probs[static_cast<std::size_t>(m) * (n_max + 1) + n]; }

    double row_sum(int m) const;
    double col_sum(int n) const;
    double correlation() const;

    /// CSV with header "m,n,prob", m-major; `meta` lines are prefixed '#'.
    void write_csv(std::ostream& os, const std::vector<std::string>& meta = {}) const;
};

/// Arrival times of the pair on [0, horizon]; t1 for N1, t2 for N2.
struct EventTimePair {
    std::vector<double> t1;
    std::vector<double> t2;

    int count1() const { return static_cast<int>(t1.size()); }
    int count2() const { return static_cast<int>(t2.size()); }
};

/// One-step jump-indicator law over dt.
struct StepProbs {
    double p00, p01, p10, p11;
};

/// Samples the coupled arrival times. Y_k, Z_k ~ Exp(lambda2) and a Bernoulli
/// with P{B=0}=a build X_k = a Y_k + B_k Z_k; N2's arrivals are the partial
/// sums of X, N1's are the Y partial sums rescaled by lambda2/lambda1 (Erlang
/// with rate lambda1).
EventTimePair sample_pair(const DependenceParams& params, double horizon, CounterRng& rng);

/// Exact joint law, branch chosen on gamma. Entries are evaluated with
/// compensated arithmetic; an entry below -1e-6 signals precision exhaustion
/// and raises InstabilityError, residues in [-1e-6, 0) clip to zero.
JointPmf joint_pmf(const DependenceParams& params, double t, double tail_tol = 1e-10);

/// Evaluates both Proposition branches at a gamma = 1 parameter point and
/// returns the max absolute entry difference. Throws unless a*lambda1 is
/// within 1e-9 of lambda2.
double joint_pmf_boundary_check(const DependenceParams& params, double t);

/// Corr[N1(t), N2(t)] from the joint law.
double poisson_correlation(const DependenceParams& params, double t);

/// Correlation lambda/sqrt(lambda1*lambda2) of the common-jump construction
/// N_i = N + N_i^X; requires lambda <= min(lambda1, lambda2).
double common_jump_correlation(double lambda, double lambda1, double lambda2);

/// Joint law of the common-jump construction (for exports and the
/// shared-count dependence mode).
JointPmf common_joint_pmf(double lambda, double lambda1, double lambda2, double t,
                          double tail_tol = 1e-10);

/// Joint CDF H(x1, x2) of the coupled exponential pair X1 ~ Exp(lambda1),
/// X2 ~ Exp(lambda2) with X2 = gamma X1 + Z_a. Negative arguments return 0.
double joint_cdf_exponential(double x1, double x2, const DependenceParams& params);

StepProbs step_probs_independent(double lambda1, double lambda2, double dt);
StepProbs step_probs_common(double lambda, double lambda1, double lambda2, double dt);
StepProbs step_probs_cointegrated(const DependenceParams& params, double dt);

namespace detail {
enum class Branch { gamma_ge_1, gamma_le_1 };
JointPmf joint_pmf_branch(const DependenceParams& params, double t, double tail_tol, Branch branch);
}  // namespace detail

}  // namespace cointjump::bipoisson
