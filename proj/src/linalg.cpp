#include "permeq/linalg.hpp"

namespace permeq {

Mat Mat::identity(size_t n, unsigned conductor) {
    Mat m(n, n, conductor);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::rational(1, conductor);
    return m;
}

Mat Mat::permutation(const std::vector<size_t>& perm, unsigned conductor) {
    Mat m(perm.size(), perm.size(), conductor);
    for (size_t j = 0; j < perm.size(); ++j) m.at(perm[j], j) = Scalar::rational(1, conductor);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix shape mismatch in product");
    Mat out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat out = *this;
    for (Scalar& x : out.data_)
        if (!x.is_zero()) x *= s;
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::kron(const Mat& o) const {
    Mat out(rows_ * o.rows_, cols_ * o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (size_t k = 0; k < o.rows_; ++k)
                for (size_t l = 0; l < o.cols_; ++l) {
                    const Scalar& b = o.at(k, l);
                    if (b.is_zero()) continue;
                    out.at(i * o.rows_ + k, j * o.cols_ + l) = a * b;
                }
        }
    return out;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::logic_error("inverse of non-square matrix");
    size_t n = rows_;
    Mat aug = *this;
    Mat inv = Mat::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && aug.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(aug.at(piv, j), aug.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        Scalar p = aug.at(col, col).inverse();
        for (size_t j = 0; j < n; ++j) {
            aug.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Scalar f = aug.at(r, col);
            if (f.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                aug.at(r, j) -= f * aug.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Mat::invertible() const {
    if (rows_ != cols_) return false;
    try {
        inverse();
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const Scalar& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    Scalar one = Scalar::rational(1);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j ? at(i, j) != one : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::logic_error("vector length mismatch");
    std::vector<Scalar> out(rows_, Scalar());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += at(i, j) * v[j];
        }
    return out;
}

std::vector<Scalar> solve_linear(const Mat& a, const std::vector<Scalar>& b) {
    return a.inverse().apply(b);
}

}  // namespace permeq
