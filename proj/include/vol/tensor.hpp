#ifndef VOL_TENSOR_HPP
#define VOL_TENSOR_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace vol {

/// Dense row-major tensor of doubles. Rank is dynamic; most of the code
/// uses ranks 1..4.
struct Tensor {
    std::vector<int> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)), data(count(shape), 0.0) {}
    Tensor(std::vector<int> s, std::vector<double> d) : shape(std::move(s)), data(std::move(d)) {
        assert(static_cast<std::size_t>(count(shape)) == data.size());
    }

    static std::size_t count(const std::vector<int>& s) {
        std::size_t n = 1;
        for (int d : s) n *= static_cast<std::size_t>(d);
        return n;
    }

    static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }
    static Tensor full(std::vector<int> s, double v) {
        Tensor t(std::move(s));
        std::fill(t.data.begin(), t.data.end(), v);
        return t;
    }
    static Tensor scalar(double v) { return Tensor({1}, {v}); }
    static Tensor vec(std::vector<double> d) {
        int n = static_cast<int>(d.size());
        return Tensor({n}, std::move(d));
    }

    std::size_t numel() const { return data.size(); }
    int rank() const { return static_cast<int>(shape.size()); }
    int dim(int i) const { return shape[static_cast<std::size_t>(i < 0 ? rank() + i : i)]; }

    double& at(int i) { return data[static_cast<std::size_t>(i)]; }
    double at(int i) const { return data[static_cast<std::size_t>(i)]; }
    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * shape[1] + j]; }
    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * shape[1] + j]; }
    double& at(int i, int j, int k) {
        return data[(static_cast<std::size_t>(i) * shape[1] + j) * shape[2] + k];
    }
    double at(int i, int j, int k) const {
        return data[(static_cast<std::size_t>(i) * shape[1] + j) * shape[2] + k];
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }
};

} // namespace vol

#endif // VOL_TENSOR_HPP
