#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <string>

#include "mtlr/encoder.hpp"
#include "mtlr/encoding.hpp"
#include "mtlr/mtlr_head.hpp"
#include "mtlr/time_grid.hpp"
#include "mtlr/types.hpp"

namespace mtlr {

// Encoder followed by the MTLR head. The encoder may be the identity
// (no layers), which reduces the model to linear MTLR.
struct SurvivalModel {
    EncoderNet encoder;
    MtlrHead head;

    void validate() const;

    PredictionGrid predict_pmf(const Eigen::VectorXd& x) const;
    CifCurve predict_cif(const Eigen::VectorXd& x) const;

    // Mean negative log-likelihood over the cohort, no penalties.
    double mean_nll(const Cohort& cohort) const;

    struct LossGrad {
        double loss = 0.0;
        Eigen::VectorXd grad;
    };

    // Mean NLL + (c1/2)||head weights||^2 + (c2/2)||encoder weights||^2 and
    // its exact gradient in flattened layout. Biases are never penalized.
    LossGrad loss_and_gradient(const Cohort& cohort, double c1, double c2) const;

    // Flat parameter layout: encoder layers in order (weights row-major,
    // then bias), followed by head events in order (weights row-major, then
    // bias). Used by the optimizer and by finite-difference checks.
    Eigen::Index n_params() const;
    Eigen::VectorXd flatten_params() const;
    void set_params(const Eigen::VectorXd& flat);
};

struct TrainMeta {
    double learning_rate = 0.0;
    double c1_head = 0.0;
    double c2_encoder = 0.0;
    int max_epochs = 0;
    int batch_size = 0;
    std::uint64_t seed = 0;
    int patience = 0;
    int best_epoch = -1;
    int final_epoch = -1;
    double validation_nll = std::numeric_limits<double>::quiet_NaN();
};

// Everything needed to score new data: grid, fitted encoding, parameters
// and a record of how training went.
struct ModelBundle {
    TimeGrid grid;
    FeatureEncoding encoding;
    SurvivalModel model;
    TrainMeta meta;
};

// JSON model file, format_version 1, written atomically (temp file +
// rename). Round-trips every parameter bit-exactly.
void save_model(const ModelBundle& bundle, const std::string& path);
ModelBundle load_model(const std::string& path);

}  // namespace mtlr
