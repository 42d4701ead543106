#pragma once
#include <cblas.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

extern "C" void openblas_set_num_threads(int);

namespace pidmlab {

// runs are parallelized across processes, so BLAS stays single-threaded;
// this also keeps results reproducible on boxes with different core counts
inline void ensure_single_thread_blas() {
  static const bool done = [] {
    openblas_set_num_threads(1);
    return true;
  }();
  (void)done;
}

template <class T>
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<T> data;  // row-major

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

  T& operator()(size_t i, size_t j) { return data[i * cols + j]; }
  const T& operator()(size_t i, size_t j) const { return data[i * cols + j]; }
  T* row(size_t i) { return data.data() + i * cols; }
  const T* row(size_t i) const { return data.data() + i * cols; }
  size_t size() const { return data.size(); }
  void fill(T v) { std::fill(data.begin(), data.end(), v); }
};

namespace detail {
inline void blas_gemm(bool ta, bool tb, size_t m, size_t n, size_t k, float alpha, const float* a,
                      size_t lda, const float* b, size_t ldb, float beta, float* c, size_t ldc) {
  cblas_sgemm(CblasRowMajor, ta ? CblasTrans : CblasNoTrans, tb ? CblasTrans : CblasNoTrans, int(m),
              int(n), int(k), alpha, a, int(lda), b, int(ldb), beta, c, int(ldc));
}
inline void blas_gemm(bool ta, bool tb, size_t m, size_t n, size_t k, double alpha, const double* a,
                      size_t lda, const double* b, size_t ldb, double beta, double* c, size_t ldc) {
  cblas_dgemm(CblasRowMajor, ta ? CblasTrans : CblasNoTrans, tb ? CblasTrans : CblasNoTrans, int(m),
              int(n), int(k), alpha, a, int(lda), b, int(ldb), beta, c, int(ldc));
}
}  // namespace detail

// C = alpha * op(A) @ op(B) + beta * C
template <class T>
void gemm(bool trans_a, bool trans_b, T alpha, const Matrix<T>& A, const Matrix<T>& B, T beta,
          Matrix<T>& C) {
  ensure_single_thread_blas();
  size_t m = trans_a ? A.cols : A.rows;
  size_t k = trans_a ? A.rows : A.cols;
  size_t kb = trans_b ? B.cols : B.rows;
  size_t n = trans_b ? B.rows : B.cols;
  if (k != kb || C.rows != m || C.cols != n) throw std::runtime_error("gemm shape mismatch");
  detail::blas_gemm(trans_a, trans_b, m, n, k, alpha, A.data.data(), A.cols, B.data.data(), B.cols,
                    beta, C.data.data(), C.cols);
}

}  // namespace pidmlab
