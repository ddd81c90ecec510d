#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace monolab {

using Complex = std::complex<double>;

// Shared numeric tolerances: input validation, decomposition residuals, and
// comparisons against externally reported values.
inline constexpr double kValidationTol = 1e-10;
inline constexpr double kReconstructionTol = 1e-8;
inline constexpr double kReportedValueTol = 1e-6;

/// Dense complex matrix, row-major. Sized for multi-qubit desk work
/// (dimension at most 2^6); no sparsity, no expression templates.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    Complex trace() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex scalar) const;

    /// max_ij |a_ij - b_ij|
    double max_abs_diff(const ComplexMatrix& other) const;

    bool is_hermitian(double tol = kValidationTol) const;

    /// Throws std::invalid_argument unless Hermitian (tol), unit trace (tol)
    /// and eigenvalues >= -tol.
    void validate_density(double tol = kValidationTol) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// Pure state on n qubits. Qubit 0 is the most significant bit of the
/// computational-basis index, so |q0 q1 ... q_{n-1}> has index
/// q0*2^{n-1} + ... + q_{n-1}.
class StateVector {
public:
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const;

private:
    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// A bipartition of `total` qubits: the kept side is a nonempty proper
/// subset, listed strictly increasing.
struct PartitionSpec {
    std::vector<int> keep;
    int total = 0;

    PartitionSpec(std::vector<int> keep_qubits, int total_qubits);

    /// Qubits not in `keep`, increasing.
    std::vector<int> complement() const;
};

/// Kronecker product; a's indices are the most significant.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// |psi><psi|
ComplexMatrix density_matrix(const StateVector& psi);

/// Reduced density matrix on spec.keep, tracing out the complement.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const PartitionSpec& spec);

/// Real eigenvalues of a Hermitian matrix, sorted descending.
/// Rejects input whose Hermiticity deviation exceeds kValidationTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct EigenSystem {
    std::vector<double> eigenvalues;   // descending
    ComplexMatrix eigenvectors;        // column k pairs with eigenvalues[k]
};

EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Hermitian PSD square root. Eigenvalues in [-kValidationTol, 0) are
/// clamped to zero; more negative ones reject the input.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Text format: one line "n_qubits=<k>" then 2^k lines "re im".
/// Amplitudes are renormalized when |norm - 1| <= 1e-6, rejected otherwise.
StateVector load_state(std::istream& in);
StateVector load_state_file(const std::string& path);

}  // namespace monolab
