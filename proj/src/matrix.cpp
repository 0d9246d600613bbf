#include "qic/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "qic/errors.hpp"

namespace qic {

int dim_product(const DimensionList& dims) {
    int p = 1;
    for (int d : dims) {
        if (d <= 0) throw invariant_violation("subsystem dimensions must be positive");
        p *= d;
    }
    return p;
}

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, cplx(0.0, 0.0)) {
    if (rows <= 0 || cols <= 0) throw invariant_violation("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw invariant_violation("matrix dimensions must be positive");
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw invariant_violation("entry count does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    if (rows_ == 0 || cols_ == 0) throw invariant_violation("matrix dimensions must be positive");
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw invariant_violation("ragged initializer rows");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = std::conj(a_[i]);
    return m;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw invariant_violation("trace of non-square matrix");
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const cplx& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double ComplexMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (int r = 0; r < rows_; ++r)
        for (int c = r; c < cols_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw invariant_violation("matrix shape mismatch in addition");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw invariant_violation("matrix shape mismatch in subtraction");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (cplx& z : a_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw invariant_violation("matrix shape mismatch in product");
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<cplx> operator*(const ComplexMatrix& a, const std::vector<cplx>& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw invariant_violation("matrix/vector shape mismatch");
    std::vector<cplx> out(a.rows(), cplx(0.0, 0.0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw invariant_violation("matrix shape mismatch in comparison");
    double m = 0.0;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_finite() || !b.is_finite())
        throw invariant_violation("kron operand contains non-finite entries");
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const DimensionList& dims,
                            const std::vector<int>& keep) {
    if (!m.is_square()) throw invariant_violation("partial_trace needs a square matrix");
    const int n = static_cast<int>(dims.size());
    if (dim_product(dims) != m.rows())
        throw invariant_violation("subsystem dimensions do not multiply to the matrix dimension");

    std::vector<bool> kept(n, false);
    for (int k : keep) {
        if (k < 0 || k >= n) throw invariant_violation("partial_trace keep index out of range");
        if (kept[k]) throw invariant_violation("duplicate keep index");
        kept[k] = true;
    }

    // mixed-radix strides, slowest subsystem first
    std::vector<int> stride(n);
    int s = 1;
    for (int i = n - 1; i >= 0; --i) {
        stride[i] = s;
        s *= dims[i];
    }

    std::vector<int> keep_idx, trace_idx;
    for (int i = 0; i < n; ++i) (kept[i] ? keep_idx : trace_idx).push_back(i);

    int keep_dim = 1, trace_dim = 1;
    for (int i : keep_idx) keep_dim *= dims[i];
    for (int i : trace_idx) trace_dim *= dims[i];

    // full-matrix offset of a multi-index restricted to the given subsystems
    auto offset = [&](const std::vector<int>& subsys, int flat) {
        int off = 0;
        for (int i = static_cast<int>(subsys.size()) - 1; i >= 0; --i) {
            const int d = dims[subsys[i]];
            off += (flat % d) * stride[subsys[i]];
            flat /= d;
        }
        return off;
    };

    ComplexMatrix out(std::max(keep_dim, 1), std::max(keep_dim, 1));
    for (int r = 0; r < keep_dim; ++r) {
        const int roff = offset(keep_idx, r);
        for (int c = 0; c < keep_dim; ++c) {
            const int coff = offset(keep_idx, c);
            cplx sum = 0.0;
            for (int t = 0; t < trace_dim; ++t) {
                const int toff = offset(trace_idx, t);
                sum += m(roff + toff, coff + toff);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

ComplexMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    ComplexMatrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = u[i] * std::conj(v[j]);
    return m;
}

cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v) {
    if (u.size() != v.size()) throw invariant_violation("vector length mismatch");
    cplx s = 0.0;
    for (size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

std::vector<cplx> kron_vec(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() * b.size());
    size_t idx = 0;
    for (const cplx& x : a)
        for (const cplx& y : b) out[idx++] = x * y;
    return out;
}

ComplexMatrix sigma_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix sigma_y() { return ComplexMatrix{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}; }
ComplexMatrix sigma_z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace qic
