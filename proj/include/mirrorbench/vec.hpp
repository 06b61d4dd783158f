#ifndef MIRRORBENCH_VEC_HPP_
#define MIRRORBENCH_VEC_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace mirrorbench {

using Vec = std::vector<double>;

/// Sparse vector with sorted, unique indices.
struct SparseVec {
    int dim = 0;
    std::vector<int> idx;
    std::vector<double> val;

    std::size_t nnz() const { return idx.size(); }

    Vec dense() const {
        Vec out(static_cast<std::size_t>(dim), 0.0);
        for (std::size_t k = 0; k < idx.size(); ++k) out[static_cast<std::size_t>(idx[k])] = val[k];
        return out;
    }

    static SparseVec from_dense(std::span<const double> x) {
        SparseVec s;
        s.dim = static_cast<int>(x.size());
        for (int i = 0; i < s.dim; ++i) {
            if (x[static_cast<std::size_t>(i)] != 0.0) {
                s.idx.push_back(i);
                s.val.push_back(x[static_cast<std::size_t>(i)]);
            }
        }
        return s;
    }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double sparse_dot(const SparseVec& a, std::span<const double> x) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.idx.size(); ++k) s += a.val[k] * x[static_cast<std::size_t>(a.idx[k])];
    return s;
}

/// x += alpha * s for sparse s.
inline void sparse_axpy(double alpha, const SparseVec& s, Vec& x) {
    for (std::size_t k = 0; k < s.idx.size(); ++k) x[static_cast<std::size_t>(s.idx[k])] += alpha * s.val[k];
}

inline double norm1(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
}

inline double norm2(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

inline double norm_inf(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s = std::max(s, std::abs(v));
    return s;
}

inline double dist2(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double dist1(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

inline double sum(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
}

}  // namespace mirrorbench

#endif  // MIRRORBENCH_VEC_HPP_
