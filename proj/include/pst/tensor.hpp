#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pst {

// Flat named parameter array. Row-major; shape is bookkeeping for
// serialization and error messages, all math indexes the flat data directly.
struct Tensor {
    std::string name;
    std::vector<int> shape;
    std::vector<double> data;

    Tensor() = default;
    Tensor(std::string n, std::vector<int> s) : name(std::move(n)), shape(std::move(s)) {
        size_t count = 1;
        for (int d : shape) count *= static_cast<size_t>(d);
        data.assign(count, 0.0);
    }

    size_t numel() const { return data.size(); }

    double* ptr() { return data.data(); }
    const double* ptr() const { return data.data(); }
};

// Same tensor names and shapes, data zeroed.
std::vector<Tensor> zeros_like(const std::vector<Tensor>& params);

// Total number of scalar parameters.
size_t total_numel(const std::vector<Tensor>& tensors);

// Euclidean norm over all tensors jointly.
double global_norm(const std::vector<Tensor>& tensors);

// True if every entry of every tensor is finite.
bool all_finite(const std::vector<Tensor>& tensors);

// Name of the first tensor containing a non-finite entry, or empty string.
std::string first_non_finite(const std::vector<Tensor>& tensors);

} // namespace pst
