#pragma once

#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

// Dense matrix over Rational. Sizes in this project stay <= 12, so plain
// Gaussian elimination with exact arithmetic is fully adequate.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[idx(i, j)]; }
    const Rational& at(int i, int j) const { return a_[idx(i, j)]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Rational& s) const;
    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transpose() const;
    Rational det() const;       // square only
    Mat inverse() const;        // throws on singular

    Mat block(int i0, int j0, int h, int w) const;
    void set_block(int i0, int j0, const Mat& b);

    bool is_zero() const;

  private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw gsp_error("matrix index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }
    int rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace gsp
