#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "mtlr/time_grid.hpp"
#include "mtlr/types.hpp"

namespace mtlr {

// Joint probability of (event, interval): an E x K matrix whose entries sum
// to one. Column K is the terminal interval (t_{K-1}, inf).
struct PredictionGrid {
    Eigen::MatrixXd probs;

    int n_events() const { return static_cast<int>(probs.rows()); }
    int n_intervals() const { return static_cast<int>(probs.cols()); }
};

// Cumulative incidence per event evaluated at the interval upper endpoints:
// values(e, k) = P(T <= t_{k+1}, E = e+1). Non-decreasing along each row;
// the last column sums to one across events.
struct CifCurve {
    Eigen::MatrixXd values;

    int n_events() const { return static_cast<int>(values.rows()); }
    int n_intervals() const { return static_cast<int>(values.cols()); }
};

// Parameters of the competing-risks MTLR head: one (K-1) x d weight matrix
// and (K-1)-vector of biases per event. The score of outcome cell (e, i) is
// the suffix sum of the per-interval linear scores from interval i onward;
// cell (e, K) has an empty suffix and scores zero for every event.
struct MtlrHead {
    int n_events = 0;     // E
    int n_intervals = 0;  // K
    int input_dim = 0;    // d
    std::vector<Eigen::MatrixXd> weights;  // per event: (K-1) x d
    std::vector<Eigen::VectorXd> biases;   // per event: K-1

    static MtlrHead zeros(int n_events, int n_intervals, int input_dim);

    // Per-interval linear scores theta_{e,k} . x + b_{e,k}, E x (K-1).
    Eigen::MatrixXd interval_scores(const Eigen::VectorXd& x) const;

    // Suffix sums of the interval scores, E x K; column K-1 is zero.
    Eigen::MatrixXd cell_scores(const Eigen::VectorXd& x) const;

    // Score of a single outcome cell; event and interval are 1-based.
    double cell_score(const Eigen::VectorXd& x, int event, int interval) const;

    // log of the normalizing constant, sum of exp over all E*K cells,
    // computed with a max-shifted log-sum-exp.
    double log_partition(const Eigen::VectorXd& x) const;

    PredictionGrid joint_pmf(const Eigen::VectorXd& x) const;

    // log P(T > t_{j-1} boundary | x) for a subject censored in interval j:
    // marginal over every cell with interval index >= j, including the
    // terminal all-zero configurations.
    double censored_log_marginal(const Eigen::VectorXd& x, int censor_bin) const;

    void check_input(const Eigen::VectorXd& x) const;
};

// Prefix sums of the joint PMF along the interval axis.
CifCurve cif(const PredictionGrid& grid);

// Step-function evaluation of the CIF at time tau: the accumulated mass of
// intervals whose upper edge lies at or below tau. Before the first edge the
// CIF is zero; the terminal interval's mass is never included for finite tau.
Eigen::VectorXd cif_at(const CifCurve& curve, const TimeGrid& grid, double tau);

// Log-likelihood of an encoded cohort: exact cell term for uncensored
// subjects, censored marginal for the rest.
double log_likelihood(const MtlrHead& head, const Cohort& cohort);

// Per-subject negative log-likelihood and its gradient with respect to the
// E x (K-1) per-interval linear scores. The parameter and encoder gradients
// both factor through this quantity.
struct SubjectNllGrad {
    double nll = 0.0;
    Eigen::MatrixXd dscores;  // E x (K-1)
};
SubjectNllGrad nll_score_gradient(const Eigen::MatrixXd& interval_scores,
                                  int event, int bin);

struct HeadGradient {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;

    static HeadGradient zeros_like(const MtlrHead& head);
};

// Mean negative log-likelihood plus (c1/2) * sum ||theta||^2 over the weight
// matrices (biases unpenalized), with its exact gradient.
std::pair<double, HeadGradient> loss_and_gradient(const MtlrHead& head,
                                                  const Cohort& cohort,
                                                  double c1);

}  // namespace mtlr
