#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace mtlr {

// One observation: follow-up time in years, event indicator (0 = censored,
// 1..E = cause of failure) and the encoded feature vector.
struct SubjectRecord {
    std::string id;
    double time = 0.0;
    int event = 0;
    Eigen::VectorXd features;
};

// A subject after time discretization: features, event indicator and the
// interval index of the event (or censoring) time, 1-based.
struct EncodedSubject {
    Eigen::VectorXd x;
    int event = 0;
    int bin = 1;
};

using Cohort = std::vector<EncodedSubject>;

}  // namespace mtlr
