#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>

#include "scgan/threadpool.hpp"

// Arithmetic inner loops. Two implementations exist for the float path: a
// scalar reference and an AVX2/FMA variant, selected at runtime (cpuid or
// the SCGAN_KERNELS env var). Double-precision callers always get the scalar
// reference; they exist for finite-difference oracles, not speed.
//
// GEMM conventions (row-major, ld = row stride):
//   gemm_nt: C[MxN] = beta*C + A[MxK] * B[NxK]^T   (contraction axis contiguous in A and B)
//   gemm_nn: C[MxN] = beta*C + A[MxK] * B[KxN]     (output axis contiguous in B and C)
// im2col patch matrices are laid out [pixels x C*kh*kw] so conv forward is
// gemm_nt, input gradients are gemm_nn on the transposed output gradient, and
// weight gradients are gemm_nn on the patch matrix.

namespace scgan::kern {

struct KernelOps {
    const char* name;
    void (*sgemm_nt)(int M, int N, int K, const float* A, int lda, const float* B, int ldb,
                     float* C, int ldc, float beta);
    void (*sgemm_nn)(int M, int N, int K, const float* A, int lda, const float* B, int ldb,
                     float* C, int ldc, float beta);
    void (*adam)(std::size_t n, float* p, const float* g, float* m, float* v, float lr, float b1,
                 float b2, float eps, float inv_bc1, float inv_bc2);
    void (*lrelu_fwd)(const float* x, float* y, std::size_t n, float slope);
    void (*lrelu_bwd)(const float* x, const float* gy, float* gx, std::size_t n, float slope);
    void (*add_scaled)(float* y, const float* x, float a, std::size_t n);  // y += a*x
};

const KernelOps& ops();
// "auto", "scalar" or "avx2"; throws if the backend is unavailable.
void select_backend(const std::string& name);
std::string active_backend();
bool avx2_supported();

namespace ref {

template <typename T>
void gemm_nt(int M, int N, int K, const T* A, int lda, const T* B, int ldb, T* C, int ldc, T beta) {
    for (int i = 0; i < M; ++i) {
        const T* a = A + static_cast<std::size_t>(i) * lda;
        T* c = C + static_cast<std::size_t>(i) * ldc;
        for (int j = 0; j < N; ++j) {
            const T* b = B + static_cast<std::size_t>(j) * ldb;
            T acc = 0;
            for (int k = 0; k < K; ++k) acc += a[k] * b[k];
            c[j] = beta * c[j] + acc;
        }
    }
}

template <typename T>
void gemm_nn(int M, int N, int K, const T* A, int lda, const T* B, int ldb, T* C, int ldc, T beta) {
    for (int i = 0; i < M; ++i) {
        const T* a = A + static_cast<std::size_t>(i) * lda;
        T* c = C + static_cast<std::size_t>(i) * ldc;
        for (int j = 0; j < N; ++j) c[j] *= beta;
        for (int k = 0; k < K; ++k) {
            const T ak = a[k];
            const T* b = B + static_cast<std::size_t>(k) * ldb;
            for (int j = 0; j < N; ++j) c[j] += ak * b[j];
        }
    }
}

void sgemm_nt(int M, int N, int K, const float* A, int lda, const float* B, int ldb, float* C,
              int ldc, float beta);
void sgemm_nn(int M, int N, int K, const float* A, int lda, const float* B, int ldb, float* C,
              int ldc, float beta);
void adam(std::size_t n, float* p, const float* g, float* m, float* v, float lr, float b1, float b2,
          float eps, float inv_bc1, float inv_bc2);
void lrelu_fwd(const float* x, float* y, std::size_t n, float slope);
void lrelu_bwd(const float* x, const float* gy, float* gx, std::size_t n, float slope);
void add_scaled(float* y, const float* x, float a, std::size_t n);

}  // namespace ref

// ---- public entry points (thread the work, then dispatch) ----

inline void gemm_nt(int M, int N, int K, const float* A, int lda, const float* B, int ldb, float* C,
                    int ldc, float beta) {
    const auto& k = ops();
    const double work = static_cast<double>(M) * N * K;
    if (work < (1 << 16) || ThreadPool::instance().size() == 1) {
        k.sgemm_nt(M, N, K, A, lda, B, ldb, C, ldc, beta);
        return;
    }
    parallel_for(M, [&](std::int64_t i0, std::int64_t i1) {
        k.sgemm_nt(static_cast<int>(i1 - i0), N, K, A + i0 * lda, lda, B, ldb, C + i0 * ldc, ldc, beta);
    });
}

inline void gemm_nn(int M, int N, int K, const float* A, int lda, const float* B, int ldb, float* C,
                    int ldc, float beta) {
    const auto& k = ops();
    const double work = static_cast<double>(M) * N * K;
    if (work < (1 << 16) || ThreadPool::instance().size() == 1) {
        k.sgemm_nn(M, N, K, A, lda, B, ldb, C, ldc, beta);
        return;
    }
    // Split the contiguous output axis so each thread owns disjoint columns.
    parallel_for(N, [&](std::int64_t j0, std::int64_t j1) {
        k.sgemm_nn(M, static_cast<int>(j1 - j0), K, A, lda, B + j0, ldb, C + j0, ldc, beta);
    });
}

template <typename T>
void gemm_nt(int M, int N, int K, const T* A, int lda, const T* B, int ldb, T* C, int ldc, T beta) {
    ref::gemm_nt(M, N, K, A, lda, B, ldb, C, ldc, beta);
}

template <typename T>
void gemm_nn(int M, int N, int K, const T* A, int lda, const T* B, int ldb, T* C, int ldc, T beta) {
    ref::gemm_nn(M, N, K, A, lda, B, ldb, C, ldc, beta);
}

inline void adam_step(std::size_t n, float* p, const float* g, float* m, float* v, float lr,
                      float b1, float b2, float eps, float inv_bc1, float inv_bc2) {
    const auto& k = ops();
    if (n < (1 << 14) || ThreadPool::instance().size() == 1) {
        k.adam(n, p, g, m, v, lr, b1, b2, eps, inv_bc1, inv_bc2);
        return;
    }
    parallel_for(static_cast<std::int64_t>(n), [&](std::int64_t a, std::int64_t b) {
        k.adam(static_cast<std::size_t>(b - a), p + a, g + a, m + a, v + a, lr, b1, b2, eps, inv_bc1,
               inv_bc2);
    });
}

inline void leaky_relu_forward(const float* x, float* y, std::size_t n, float slope) {
    const auto& k = ops();
    if (n < (1 << 14)) {
        k.lrelu_fwd(x, y, n, slope);
        return;
    }
    parallel_for(static_cast<std::int64_t>(n),
                 [&](std::int64_t a, std::int64_t b) { k.lrelu_fwd(x + a, y + a, b - a, slope); });
}

inline void leaky_relu_backward(const float* x, const float* gy, float* gx, std::size_t n,
                                float slope) {
    const auto& k = ops();
    if (n < (1 << 14)) {
        k.lrelu_bwd(x, gy, gx, n, slope);
        return;
    }
    parallel_for(static_cast<std::int64_t>(n), [&](std::int64_t a, std::int64_t b) {
        k.lrelu_bwd(x + a, gy + a, gx + a, b - a, slope);
    });
}

template <typename T>
void leaky_relu_forward(const T* x, T* y, std::size_t n, T slope) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0 ? x[i] : slope * x[i];
}

template <typename T>
void leaky_relu_backward(const T* x, const T* gy, T* gx, std::size_t n, T slope) {
    for (std::size_t i = 0; i < n; ++i) gx[i] = x[i] > 0 ? gy[i] : slope * gy[i];
}

inline void add_scaled(float* y, const float* x, float a, std::size_t n) {
    const auto& k = ops();
    if (n < (1 << 14)) {
        k.add_scaled(y, x, a, n);
        return;
    }
    parallel_for(static_cast<std::int64_t>(n),
                 [&](std::int64_t b, std::int64_t e) { k.add_scaled(y + b, x + b, a, e - b); });
}

template <typename T>
void add_scaled(T* y, const T* x, T a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

}  // namespace scgan::kern
