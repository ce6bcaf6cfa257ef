#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace svi {

// Dense row-major matrix of doubles. Rows are contiguous, so per-row kernels
// (digamma, exp-normalize, blends) operate on flat spans.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    assert(rows >= 0 && cols >= 0);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }

  double* row(int r) {
    assert(r >= 0 && r < rows_);
    return data_.data() + static_cast<size_t>(r) * cols_;
  }
  const double* row(int r) const {
    assert(r >= 0 && r < rows_);
    return data_.data() + static_cast<size_t>(r) * cols_;
  }
  std::span<double> row_span(int r) { return {row(r), static_cast<size_t>(cols_)}; }
  std::span<const double> row_span(int r) const {
    return {row(r), static_cast<size_t>(cols_)};
  }

  double& operator()(int r, int c) {
    assert(c >= 0 && c < cols_);
    return row(r)[c];
  }
  double operator()(int r, int c) const {
    assert(c >= 0 && c < cols_);
    return row(r)[c];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& flat() { return data_; }
  const std::vector<double>& flat() const { return data_; }

  void fill(double v) { data_.assign(data_.size(), v); }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

}  // namespace svi
