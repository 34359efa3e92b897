#include "rafcn/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace rafcn {

int64_t numel(const std::vector<int64_t>& shape) {
    int64_t n = 1;
    for (int64_t e : shape) n *= e;
    return n;
}

std::string shape_string(const std::vector<int64_t>& shape) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) os << "x";
        os << shape[i];
    }
    os << ")";
    return os.str();
}

void ensure_finite(const char* op, const std::vector<double>& values) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw NumericError(std::string(op) + ": non-finite value in output");
        }
    }
}

Tensor::Tensor(std::vector<int64_t> shape, std::vector<double> data, bool requires_grad)
    : shape_(std::move(shape)), data_(std::move(data)), requires_grad_(requires_grad) {
    for (int64_t e : shape_) {
        if (e <= 0) throw DimensionError("tensor extent must be positive, got " + shape_string(shape_));
    }
    if (numel(shape_) != static_cast<int64_t>(data_.size())) {
        throw DimensionError("tensor data length " + std::to_string(data_.size()) +
                             " does not match shape " + shape_string(shape_));
    }
}

TensorPtr Tensor::create(std::vector<int64_t> shape, std::vector<double> data, bool requires_grad) {
    return std::make_shared<Tensor>(std::move(shape), std::move(data), requires_grad);
}

TensorPtr Tensor::zeros(std::vector<int64_t> shape, bool requires_grad) {
    std::vector<double> d(static_cast<size_t>(numel(shape)), 0.0);
    return create(std::move(shape), std::move(d), requires_grad);
}

TensorPtr Tensor::full(std::vector<int64_t> shape, double value, bool requires_grad) {
    std::vector<double> d(static_cast<size_t>(numel(shape)), value);
    return create(std::move(shape), std::move(d), requires_grad);
}

TensorPtr Tensor::scalar(double value, bool requires_grad) {
    return create({1}, {value}, requires_grad);
}

void Tensor::zero_grad() {
    if (grad_.empty()) {
        if (requires_grad_) grad_.assign(data_.size(), 0.0);
    } else {
        std::fill(grad_.begin(), grad_.end(), 0.0);
    }
}

void Tensor::accumulate_grad(const std::vector<double>& g) {
    if (g.size() != data_.size()) {
        throw DimensionError("gradient length mismatch: " + std::to_string(g.size()) +
                             " vs " + std::to_string(data_.size()));
    }
    if (grad_.empty()) grad_.assign(data_.size(), 0.0);
    for (size_t i = 0; i < g.size(); ++i) grad_[i] += g[i];
}

void Tensor::accumulate_grad_at(int64_t flat, double g) {
    if (grad_.empty()) grad_.assign(data_.size(), 0.0);
    grad_[static_cast<size_t>(flat)] += g;
}

double Tensor::item() const {
    if (size() != 1) {
        throw UsageError("item() requires a scalar tensor, got shape " + shape_string(shape_));
    }
    return data_[0];
}

void Tensor::set_op(const char* name, std::vector<TensorPtr> inputs,
                    std::function<void(Tensor&)> backward_fn) {
    op_name_ = name;
    inputs_ = std::move(inputs);
    backward_fn_ = std::move(backward_fn);
}

void Tensor::backward() {
    if (size() != 1) {
        throw UsageError("backward() requires a scalar output, got shape " + shape_string(shape_));
    }

    // Iterative post-order DFS; every recorded op visited exactly once,
    // then replayed in reverse so inputs never run before their consumers.
    std::vector<Tensor*> order;
    std::unordered_set<Tensor*> seen;
    std::vector<std::pair<Tensor*, size_t>> stack;
    stack.emplace_back(this, 0);
    seen.insert(this);
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < node->inputs_.size()) {
            Tensor* in = node->inputs_[next].get();
            ++next;
            if (seen.insert(in).second) stack.emplace_back(in, 0);
        } else {
            order.push_back(node);
            stack.pop_back();
        }
    }

    accumulate_grad({1.0});
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Tensor* node = *it;
        if (node->backward_fn_ && node->has_grad()) {
            node->backward_fn_(*node);
        }
    }
}

}  // namespace rafcn
