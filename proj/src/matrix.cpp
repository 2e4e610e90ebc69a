#include "gsp/matrix.hpp"

namespace gsp {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw gsp_error("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw gsp_error("matrix sum shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw gsp_error("matrix difference shape mismatch");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::operator*(const Rational& s) const {
    Mat r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rational Mat::det() const {
    if (rows_ != cols_) throw gsp_error("determinant of non-square matrix");
    Mat m = *this;
    Rational d(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j)
                std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int i = col + 1; i < rows_; ++i) {
            Rational f = m.at(i, col) * inv;
            if (f == 0) continue;
            for (int j = col; j < cols_; ++j)
                m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw gsp_error("inverse of non-square matrix");
    Mat m = *this;
    Mat inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) throw gsp_error("singular matrix");
        if (pivot != col)
            for (int j = 0; j < cols_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational f = Rational(1) / m.at(col, col);
        for (int j = 0; j < cols_; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == col) continue;
            Rational g = m.at(i, col);
            if (g == 0) continue;
            for (int j = 0; j < cols_; ++j) {
                m.at(i, j) -= g * m.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

Mat Mat::block(int i0, int j0, int h, int w) const {
    Mat b(h, w);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) b.at(i, j) = at(i0 + i, j0 + j);
    return b;
}

void Mat::set_block(int i0, int j0, const Mat& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

}  // namespace gsp
