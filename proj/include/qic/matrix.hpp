#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace qic {

using cplx = std::complex<double>;

// Subsystem dimensions of a composite Hilbert space, slowest factor first.
using DimensionList = std::vector<int>;

int dim_product(const DimensionList& dims);

// Dense complex matrix, row-major. The workhorse for operators, density
// matrices and superoperator blocks; everything here is sized for Hilbert
// space dimensions up to 64, so plain O(n^3) dense algorithms throughout.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<cplx> entries);
    // Row-by-row brace construction, e.g. ComplexMatrix{{1,0},{0,-1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<cplx>& entries() const { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    cplx trace() const;

    double frobenius_norm() const;
    double max_abs() const;
    bool is_finite() const;
    bool is_square() const { return rows_ == cols_; }
    // max-norm of m - m^dagger
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return is_square() && hermiticity_defect() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> operator*(const ComplexMatrix& a, const std::vector<cplx>& v);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; first factor is the slow (outer) index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduce a square matrix over the subsystems NOT listed in `keep`. Kept
// subsystems retain their original relative order. keep may be empty, in
// which case the result is the 1x1 matrix [Tr m].
ComplexMatrix partial_trace(const ComplexMatrix& m, const DimensionList& dims,
                            const std::vector<int>& keep);

// |u><v|
ComplexMatrix outer(const std::vector<cplx>& u, const std::vector<cplx>& v);
cplx inner(const std::vector<cplx>& u, const std::vector<cplx>& v);
std::vector<cplx> kron_vec(const std::vector<cplx>& a, const std::vector<cplx>& b);

// Pauli operators
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

}  // namespace qic
