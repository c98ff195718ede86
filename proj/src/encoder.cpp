#include "mtlr/encoder.hpp"

#include <cmath>
#include <random>

#include "mtlr/errors.hpp"

namespace mtlr {

Eigen::VectorXd FusedInput::fused() const {
    Eigen::VectorXd out(clinical.size() + image_features.size());
    out.head(clinical.size()) = clinical;
    out.tail(image_features.size()) = image_features;
    return out;
}

EncoderNet EncoderNet::identity(int dim) {
    if (dim < 0) {
        throw DataError("encoder input dimension must be non-negative");
    }
    EncoderNet net;
    net.input_dim = dim;
    return net;
}

EncoderNet EncoderNet::init(const std::vector<int>& dims, std::uint64_t seed) {
    if (dims.empty()) {
        throw DataError("encoder dims must not be empty");
    }
    for (int d : dims) {
        if (d < 1) throw DataError("encoder layer sizes must be positive");
    }
    EncoderNet net;
    net.input_dim = dims.front();
    std::mt19937_64 rng(seed);
    for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
        const int fan_in = dims[l];
        const int fan_out = dims[l + 1];
        const double bound = std::sqrt(6.0 / fan_in);
        std::uniform_real_distribution<double> dist(-bound, bound);
        EncoderLayer layer;
        layer.weights.resize(fan_out, fan_in);
        for (int r = 0; r < fan_out; ++r) {
            for (int c = 0; c < fan_in; ++c) {
                layer.weights(r, c) = dist(rng);
            }
        }
        layer.bias = Eigen::VectorXd::Zero(fan_out);
        layer.relu = true;
        net.layers.push_back(std::move(layer));
    }
    return net;
}

void EncoderNet::check_input(const Eigen::VectorXd& x) const {
    if (x.size() != input_dim) {
        throw DataError("encoder input length " + std::to_string(x.size()) +
                        " does not match expected dimension " +
                        std::to_string(input_dim));
    }
}

Eigen::VectorXd EncoderNet::forward(const Eigen::VectorXd& x) const {
    check_input(x);
    Eigen::VectorXd a = x;
    for (const auto& layer : layers) {
        a = layer.weights * a + layer.bias;
        if (layer.relu) a = a.cwiseMax(0.0);
    }
    return a;
}

Eigen::VectorXd EncoderNet::forward(const FusedInput& fused) const {
    return forward(fused.fused());
}

EncoderCache EncoderNet::forward_cached(const Eigen::VectorXd& x) const {
    check_input(x);
    EncoderCache cache;
    cache.input = x;
    cache.pre_activations.reserve(layers.size());
    cache.activations.reserve(layers.size());
    const Eigen::VectorXd* a = &cache.input;
    for (const auto& layer : layers) {
        cache.pre_activations.push_back(layer.weights * (*a) + layer.bias);
        const auto& z = cache.pre_activations.back();
        cache.activations.push_back(layer.relu ? z.cwiseMax(0.0).eval() : z);
        a = &cache.activations.back();
    }
    return cache;
}

EncoderGradient EncoderNet::zero_gradient() const {
    EncoderGradient grad;
    grad.weights.reserve(layers.size());
    grad.biases.reserve(layers.size());
    for (const auto& layer : layers) {
        grad.weights.push_back(
            Eigen::MatrixXd::Zero(layer.weights.rows(), layer.weights.cols()));
        grad.biases.push_back(Eigen::VectorXd::Zero(layer.bias.size()));
    }
    return grad;
}

Eigen::VectorXd EncoderNet::backward(const EncoderCache& cache,
                                     const Eigen::VectorXd& upstream,
                                     EncoderGradient& grad) const {
    if (upstream.size() != output_dim()) {
        throw DataError("upstream gradient length does not match encoder output");
    }
    Eigen::VectorXd delta = upstream;
    for (int l = static_cast<int>(layers.size()) - 1; l >= 0; --l) {
        const auto& layer = layers[l];
        if (layer.relu) {
            delta = delta.cwiseProduct(
                (cache.pre_activations[l].array() > 0.0).cast<double>().matrix());
        }
        const Eigen::VectorXd& below =
            (l == 0) ? cache.input : cache.activations[l - 1];
        grad.weights[l].noalias() += delta * below.transpose();
        grad.biases[l] += delta;
        delta = layer.weights.transpose() * delta;
    }
    return delta;
}

}  // namespace mtlr
