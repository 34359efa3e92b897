#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rafcn/errors.hpp"

namespace rafcn {

class Tensor;
using TensorPtr = std::shared_ptr<Tensor>;

/// Dense row-major tensor of 64-bit floats with reverse-mode autodiff.
///
/// Values are immutable once an op has consumed the tensor; the gradient
/// buffer is the only part mutated afterwards (by backward passes and
/// zero_grad). Each op output records its inputs and a backward closure,
/// so the graph is rebuilt on every forward pass. Gradients accumulate
/// additively across fan-out; callers zero them between optimizer steps.
class Tensor : public std::enable_shared_from_this<Tensor> {
public:
    Tensor(std::vector<int64_t> shape, std::vector<double> data, bool requires_grad);

    static TensorPtr create(std::vector<int64_t> shape, std::vector<double> data,
                            bool requires_grad = false);
    static TensorPtr zeros(std::vector<int64_t> shape, bool requires_grad = false);
    static TensorPtr full(std::vector<int64_t> shape, double value,
                          bool requires_grad = false);
    static TensorPtr scalar(double value, bool requires_grad = false);

    const std::vector<int64_t>& shape() const { return shape_; }
    int64_t rank() const { return static_cast<int64_t>(shape_.size()); }
    int64_t extent(int64_t axis) const { return shape_[static_cast<size_t>(axis)]; }
    int64_t size() const { return static_cast<int64_t>(data_.size()); }
    bool requires_grad() const { return requires_grad_; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& mutable_data() { return data_; }
    double value_at(int64_t flat) const { return data_[static_cast<size_t>(flat)]; }

    /// Gradient buffer; empty until backward has reached this tensor.
    const std::vector<double>& grad() const { return grad_; }
    bool has_grad() const { return !grad_.empty(); }
    void zero_grad();
    void accumulate_grad(const std::vector<double>& g);
    void accumulate_grad_at(int64_t flat, double g);

    /// Scalar payload; throws UsageError unless size() == 1.
    double item() const;

    /// Reverse-mode pass from a scalar output. Seeds d(this)/d(this) = 1,
    /// walks the recorded graph once in reverse topological order and
    /// accumulates into every requires_grad tensor reachable from here.
    void backward();

    /// Graph record (set by ops; leaves keep these empty).
    void set_op(const char* name, std::vector<TensorPtr> inputs,
                std::function<void(Tensor&)> backward_fn);
    const char* op_name() const { return op_name_; }
    const std::vector<TensorPtr>& inputs() const { return inputs_; }

private:
    std::vector<int64_t> shape_;
    std::vector<double> data_;
    std::vector<double> grad_;
    bool requires_grad_ = false;

    const char* op_name_ = "leaf";
    std::vector<TensorPtr> inputs_;
    std::function<void(Tensor&)> backward_fn_;
};

int64_t numel(const std::vector<int64_t>& shape);
std::string shape_string(const std::vector<int64_t>& shape);

/// Throws NumericError naming `op` if any value is non-finite.
void ensure_finite(const char* op, const std::vector<double>& values);

}  // namespace rafcn
