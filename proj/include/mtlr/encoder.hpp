#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace mtlr {

// Two feature blocks fused by concatenation; the image block is a
// precomputed fixed-length vector and may be absent.
struct FusedInput {
    Eigen::VectorXd clinical;
    Eigen::VectorXd image_features;

    Eigen::VectorXd fused() const;
};

struct EncoderLayer {
    Eigen::MatrixXd weights;  // out x in
    Eigen::VectorXd bias;     // out
    bool relu = true;
};

struct EncoderCache {
    Eigen::VectorXd input;
    std::vector<Eigen::VectorXd> pre_activations;
    std::vector<Eigen::VectorXd> activations;

    const Eigen::VectorXd& output() const {
        return activations.empty() ? input : activations.back();
    }
};

struct EncoderGradient {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
};

// Feed-forward chain of affine layers with optional ReLU. A net with no
// layers is the identity map, used by the linear model.
struct EncoderNet {
    int input_dim = 0;
    std::vector<EncoderLayer> layers;

    static EncoderNet identity(int dim);

    // dims = (input, hidden..., output); one ReLU layer per consecutive
    // pair, weights ~ U(-sqrt(6/fan_in), sqrt(6/fan_in)), biases zero.
    static EncoderNet init(const std::vector<int>& dims, std::uint64_t seed);

    int output_dim() const {
        return layers.empty() ? input_dim
                              : static_cast<int>(layers.back().weights.rows());
    }

    Eigen::VectorXd forward(const Eigen::VectorXd& x) const;
    Eigen::VectorXd forward(const FusedInput& fused) const;
    EncoderCache forward_cached(const Eigen::VectorXd& x) const;

    // Backpropagates an upstream gradient through the cached forward pass,
    // accumulating parameter gradients and returning the input gradient.
    // ReLU takes subgradient 0 at exactly 0.
    Eigen::VectorXd backward(const EncoderCache& cache,
                             const Eigen::VectorXd& upstream,
                             EncoderGradient& grad) const;

    EncoderGradient zero_gradient() const;
    void check_input(const Eigen::VectorXd& x) const;
};

}  // namespace mtlr
