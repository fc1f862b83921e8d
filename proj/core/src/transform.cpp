#include "dct3mg/transform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace dct3mg {

namespace {
constexpr double kPi = std::numbers::pi;

std::map<int, Eigen::MatrixXd> g_cache;
std::mutex g_cache_mutex;
} // namespace

std::vector<double> frequency_grid(int m) {
    std::vector<double> x(m);
    for (int j = 0; j < m; ++j) x[j] = j * kPi / m;
    return x;
}

const Eigen::MatrixXd& dct3_matrix(int m) {
    if (m < 1) throw std::invalid_argument("dct3_matrix: m must be positive");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(m);
    if (it != g_cache.end()) return it->second;
    Eigen::MatrixXd Q(m, m);
    for (int j = 0; j < m; ++j) {
        const double norm = std::sqrt((j == 0 ? 1.0 : 2.0) / m);
        for (int i = 0; i < m; ++i) Q(i, j) = norm * std::cos(j * (i + 0.5) * kPi / m);
    }
    return g_cache.emplace(m, std::move(Q)).first->second;
}

Eigen::VectorXd dct3_apply(int m, const Eigen::VectorXd& v) {
    if (v.size() != m) throw std::invalid_argument("dct3_apply: size mismatch");
    return dct3_matrix(m) * v;
}

Eigen::VectorXd dct3_apply_transpose(int m, const Eigen::VectorXd& v) {
    if (v.size() != m) throw std::invalid_argument("dct3_apply_transpose: size mismatch");
    return dct3_matrix(m).transpose() * v;
}

Eigen::MatrixXd tensor_apply(int m1, int m2, const Eigen::MatrixXd& V) {
    if (V.rows() != m1 || V.cols() != m2) throw std::invalid_argument("tensor_apply: size mismatch");
    return dct3_matrix(m1) * V * dct3_matrix(m2).transpose();
}

Eigen::MatrixXd tensor_apply_transpose(int m1, int m2, const Eigen::MatrixXd& V) {
    if (V.rows() != m1 || V.cols() != m2) throw std::invalid_argument("tensor_apply_transpose: size mismatch");
    return dct3_matrix(m1).transpose() * V * dct3_matrix(m2);
}

} // namespace dct3mg
