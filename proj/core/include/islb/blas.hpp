#pragma once

#include <cstdint>

namespace islb::blas {

/// Row-major C = alpha * op(A) * op(B) + beta * C.
/// op(A) is (m,k), op(B) is (k,n), C is (m,n).
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k, float alpha,
          const float* a, int64_t lda, const float* b, int64_t ldb, float beta, float* c,
          int64_t ldc);
void gemm(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k, double alpha,
          const double* a, int64_t lda, const double* b, int64_t ldb, double beta, double* c,
          int64_t ldc);

/// Pins the BLAS backend to one thread; islb does its own batch-level
/// threading and needs run-to-run determinism.
void use_single_thread_blas();

}  // namespace islb::blas
