#include "mtlr/mtlr_head.hpp"

#include <algorithm>
#include <cmath>

#include "mtlr/errors.hpp"

namespace mtlr {

namespace {

// log sum exp over a whole matrix, shifted by the maximum entry.
double log_sum_exp(const Eigen::MatrixXd& scores) {
    double m = scores.maxCoeff();
    double sum = (scores.array() - m).exp().sum();
    return m + std::log(sum);
}

}  // namespace

MtlrHead MtlrHead::zeros(int n_events, int n_intervals, int input_dim) {
    if (n_events < 1 || n_intervals < 2 || input_dim < 0) {
        throw DataError("MTLR head requires E >= 1, K >= 2, d >= 0");
    }
    MtlrHead head;
    head.n_events = n_events;
    head.n_intervals = n_intervals;
    head.input_dim = input_dim;
    head.weights.assign(n_events, Eigen::MatrixXd::Zero(n_intervals - 1, input_dim));
    head.biases.assign(n_events, Eigen::VectorXd::Zero(n_intervals - 1));
    return head;
}

void MtlrHead::check_input(const Eigen::VectorXd& x) const {
    if (x.size() != input_dim) {
        throw DataError("feature vector length " + std::to_string(x.size()) +
                        " does not match head input dimension " +
                        std::to_string(input_dim));
    }
}

Eigen::MatrixXd MtlrHead::interval_scores(const Eigen::VectorXd& x) const {
    check_input(x);
    Eigen::MatrixXd g(n_events, n_intervals - 1);
    for (int e = 0; e < n_events; ++e) {
        g.row(e) = (weights[e] * x + biases[e]).transpose();
    }
    return g;
}

Eigen::MatrixXd MtlrHead::cell_scores(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd g = interval_scores(x);
    Eigen::MatrixXd s(n_events, n_intervals);
    s.col(n_intervals - 1).setZero();
    for (int i = n_intervals - 2; i >= 0; --i) {
        s.col(i) = s.col(i + 1) + g.col(i);
    }
    return s;
}

double MtlrHead::cell_score(const Eigen::VectorXd& x, int event, int interval) const {
    if (event < 1 || event > n_events || interval < 1 || interval > n_intervals) {
        throw DataError("cell index out of range");
    }
    return cell_scores(x)(event - 1, interval - 1);
}

double MtlrHead::log_partition(const Eigen::VectorXd& x) const {
    return log_sum_exp(cell_scores(x));
}

PredictionGrid MtlrHead::joint_pmf(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd s = cell_scores(x);
    double m = s.maxCoeff();
    Eigen::MatrixXd shifted = (s.array() - m).exp();
    return PredictionGrid{shifted / shifted.sum()};
}

double MtlrHead::censored_log_marginal(const Eigen::VectorXd& x, int censor_bin) const {
    if (censor_bin < 1 || censor_bin > n_intervals) {
        throw DataError("censoring bin out of range");
    }
    Eigen::MatrixXd s = cell_scores(x);
    // Cells consistent with surviving past the censoring interval's lower
    // edge: every interval index >= censor_bin, all events.
    Eigen::MatrixXd tail = s.rightCols(n_intervals - censor_bin + 1);
    return log_sum_exp(tail) - log_sum_exp(s);
}

CifCurve cif(const PredictionGrid& grid) {
    Eigen::MatrixXd values = grid.probs;
    for (int k = 1; k < values.cols(); ++k) {
        values.col(k) += values.col(k - 1);
    }
    return CifCurve{std::move(values)};
}

Eigen::VectorXd cif_at(const CifCurve& curve, const TimeGrid& grid, double tau) {
    if (tau < 0.0) {
        throw DataError("cannot evaluate CIF at a negative time");
    }
    const auto& edges = grid.edges();
    auto it = std::upper_bound(edges.begin(), edges.end(), tau);
    auto n_passed = static_cast<int>(it - edges.begin());
    if (n_passed == 0) {
        return Eigen::VectorXd::Zero(curve.n_events());
    }
    return curve.values.col(n_passed - 1);
}

SubjectNllGrad nll_score_gradient(const Eigen::MatrixXd& interval_scores,
                                  int event, int bin) {
    const auto n_events = static_cast<int>(interval_scores.rows());
    const int n_intervals = static_cast<int>(interval_scores.cols()) + 1;
    if (event < 0 || event > n_events) {
        throw DataError("event indicator out of range");
    }
    if (bin < 1 || bin > n_intervals) {
        throw DataError("interval index out of range");
    }

    Eigen::MatrixXd s(n_events, n_intervals);
    s.col(n_intervals - 1).setZero();
    for (int i = n_intervals - 2; i >= 0; --i) {
        s.col(i) = s.col(i + 1) + interval_scores.col(i);
    }

    double m = s.maxCoeff();
    Eigen::MatrixXd p = (s.array() - m).exp();
    double z = p.sum();
    double log_z = m + std::log(z);
    p /= z;

    SubjectNllGrad out;
    out.dscores.resize(n_events, n_intervals - 1);
    // d log Z / d g(e,k) is the PMF mass at intervals <= k for event e.
    Eigen::VectorXd prefix = Eigen::VectorXd::Zero(n_events);
    for (int k = 0; k < n_intervals - 1; ++k) {
        prefix += p.col(k);
        out.dscores.col(k) = prefix;
    }

    if (event != 0) {
        // Uncensored: exact cell (event, bin).
        out.nll = log_z - s(event - 1, bin - 1);
        for (int k = bin - 1; k < n_intervals - 1; ++k) {
            out.dscores(event - 1, k) -= 1.0;
        }
    } else {
        // Censored: marginal over cells with interval >= bin.
        Eigen::MatrixXd tail = s.rightCols(n_intervals - bin + 1);
        double mt = tail.maxCoeff();
        Eigen::MatrixXd r = (tail.array() - mt).exp();
        double zt = r.sum();
        out.nll = log_z - (mt + std::log(zt));
        r /= zt;
        // Subtract d log M / d g(e,k): tail mass at intervals in [bin, k].
        Eigen::VectorXd tail_prefix = Eigen::VectorXd::Zero(n_events);
        for (int k = bin - 1; k < n_intervals - 1; ++k) {
            tail_prefix += r.col(k - bin + 1);
            out.dscores.col(k) -= tail_prefix;
        }
    }
    return out;
}

double log_likelihood(const MtlrHead& head, const Cohort& cohort) {
    double total = 0.0;
    for (const auto& subject : cohort) {
        Eigen::MatrixXd s = head.cell_scores(subject.x);
        double log_z = log_sum_exp(s);
        if (subject.event != 0) {
            if (subject.event > head.n_events) {
                throw DataError("event indicator exceeds the number of events");
            }
            total += s(subject.event - 1, subject.bin - 1) - log_z;
        } else {
            total += head.censored_log_marginal(subject.x, subject.bin);
        }
    }
    return total;
}

HeadGradient HeadGradient::zeros_like(const MtlrHead& head) {
    HeadGradient g;
    g.weights.assign(head.n_events,
                     Eigen::MatrixXd::Zero(head.n_intervals - 1, head.input_dim));
    g.biases.assign(head.n_events, Eigen::VectorXd::Zero(head.n_intervals - 1));
    return g;
}

std::pair<double, HeadGradient> loss_and_gradient(const MtlrHead& head,
                                                  const Cohort& cohort,
                                                  double c1) {
    if (cohort.empty()) {
        throw DataError("cannot compute loss over an empty cohort");
    }
    if (c1 < 0.0) {
        throw DataError("regularization strength must be non-negative");
    }

    double nll_sum = 0.0;
    HeadGradient grad = HeadGradient::zeros_like(head);
    for (const auto& subject : cohort) {
        SubjectNllGrad sg =
            nll_score_gradient(head.interval_scores(subject.x), subject.event, subject.bin);
        nll_sum += sg.nll;
        for (int e = 0; e < head.n_events; ++e) {
            grad.weights[e].noalias() += sg.dscores.row(e).transpose() * subject.x.transpose();
            grad.biases[e] += sg.dscores.row(e).transpose();
        }
    }

    const double n = static_cast<double>(cohort.size());
    double loss = nll_sum / n;
    for (int e = 0; e < head.n_events; ++e) {
        grad.weights[e] /= n;
        grad.biases[e] /= n;
        loss += 0.5 * c1 * head.weights[e].squaredNorm();
        grad.weights[e] += c1 * head.weights[e];
    }
    return {loss, std::move(grad)};
}

}  // namespace mtlr
