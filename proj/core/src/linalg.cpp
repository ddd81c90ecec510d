#include "monolab/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace monolab {

namespace {

using EigenRowMajor =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenRowMajor to_eigen(const ComplexMatrix& m) {
    return Eigen::Map<const EigenRowMajor>(m.entries().data(),
                                           static_cast<Eigen::Index>(m.rows()),
                                           static_cast<Eigen::Index>(m.cols()));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ * cols_ != entries_.size()) {
        throw std::invalid_argument("ComplexMatrix: rows*cols must equal entry count");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Complex ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix must be square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = std::conj(entries_[k]);
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix multiply: dimension mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix add: dimension mismatch");
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += rhs.entries_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix subtract: dimension mismatch");
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= rhs.entries_[k];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix out = *this;
    for (auto& e : out.entries_) e *= scalar;
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

void ComplexMatrix::validate_density(double tol) const {
    if (rows_ != cols_) throw std::invalid_argument("density matrix must be square");
    if (!is_hermitian(tol)) throw std::invalid_argument("density matrix must be Hermitian");
    if (std::abs(trace() - Complex{1.0}) > tol)
        throw std::invalid_argument("density matrix must have unit trace");
    const auto evs = hermitian_eigenvalues(*this);
    if (!evs.empty() && evs.back() < -tol)
        throw std::invalid_argument("density matrix must be positive semidefinite");
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ < 1) throw std::invalid_argument("StateVector: need at least one qubit");
    if (n_qubits_ > 6) throw std::invalid_argument("StateVector: dense storage caps at 6 qubits");
    if (amplitudes_.size() != (std::size_t{1} << n_qubits_))
        throw std::invalid_argument("StateVector: amplitude count must be 2^n_qubits");
    if (std::abs(norm() - 1.0) > kValidationTol)
        throw std::invalid_argument("StateVector: squared norm must be 1 within 1e-10");
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

PartitionSpec::PartitionSpec(std::vector<int> keep_qubits, int total_qubits)
    : keep(std::move(keep_qubits)), total(total_qubits) {
    if (keep.empty()) throw std::invalid_argument("PartitionSpec: keep set must be nonempty");
    if (static_cast<int>(keep.size()) >= total)
        throw std::invalid_argument("PartitionSpec: keep set must be a proper subset");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= total)
            throw std::invalid_argument("PartitionSpec: qubit index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("PartitionSpec: keep set must be strictly increasing");
    }
}

std::vector<int> PartitionSpec::complement() const {
    std::vector<int> rest;
    for (int q = 0; q < total; ++q)
        if (!std::binary_search(keep.begin(), keep.end(), q)) rest.push_back(q);
    return rest;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix density_matrix(const StateVector& psi) {
    const auto& a = psi.amplitudes();
    ComplexMatrix rho(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) rho(i, j) = a[i] * std::conj(a[j]);
    return rho;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const PartitionSpec& spec) {
    const std::size_t dim = std::size_t{1} << spec.total;
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("partial_trace: matrix dimension must be 2^total");

    const auto rest = spec.complement();
    const std::size_t kd = std::size_t{1} << spec.keep.size();
    const std::size_t td = std::size_t{1} << rest.size();

    // Bit of qubit q sits at position total-1-q (qubit 0 most significant).
    auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
        std::size_t idx = 0;
        for (std::size_t b = 0; b < spec.keep.size(); ++b)
            if (kept_bits >> (spec.keep.size() - 1 - b) & 1)
                idx |= std::size_t{1} << (spec.total - 1 - spec.keep[b]);
        for (std::size_t b = 0; b < rest.size(); ++b)
            if (traced_bits >> (rest.size() - 1 - b) & 1)
                idx |= std::size_t{1} << (spec.total - 1 - rest[b]);
        return idx;
    };

    ComplexMatrix out(kd, kd);
    for (std::size_t a = 0; a < kd; ++a)
        for (std::size_t b = 0; b < kd; ++b) {
            Complex sum = 0.0;
            for (std::size_t e = 0; e < td; ++e) sum += rho(compose(a, e), compose(b, e));
            out(a, b) = sum;
        }
    return out;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigensystem: matrix must be square");
    if (!m.is_hermitian())
        throw std::invalid_argument("hermitian_eigensystem: matrix must be Hermitian within 1e-10");

    Eigen::SelfAdjointEigenSolver<EigenRowMajor> solver(to_eigen(m));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigensystem: eigensolver did not converge");

    const std::size_t n = m.rows();
    EigenSystem sys;
    sys.eigenvalues.resize(n);
    sys.eigenvectors = ComplexMatrix(n, n);
    // Eigen sorts ascending; flip to descending.
    for (std::size_t k = 0; k < n; ++k) {
        const auto src = static_cast<Eigen::Index>(n - 1 - k);
        sys.eigenvalues[k] = solver.eigenvalues()(src);
        for (std::size_t i = 0; i < n; ++i)
            sys.eigenvectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i), src);
    }
    return sys;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    if (!m.is_hermitian())
        throw std::invalid_argument("hermitian_eigenvalues: matrix must be Hermitian within 1e-10");
    Eigen::SelfAdjointEigenSolver<EigenRowMajor> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
    std::vector<double> evs(m.rows());
    for (std::size_t k = 0; k < evs.size(); ++k)
        evs[k] = solver.eigenvalues()(static_cast<Eigen::Index>(evs.size() - 1 - k));
    return evs;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    auto sys = hermitian_eigensystem(m);
    for (auto& ev : sys.eigenvalues) {
        if (ev < -kValidationTol)
            throw std::invalid_argument("psd_sqrt: matrix is indefinite beyond tolerance");
        if (ev < 0.0) ev = 0.0;
    }
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(sys.eigenvalues[k]);
        if (root == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = sys.eigenvectors(i, k);
            if (vik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += root * vik * std::conj(sys.eigenvectors(j, k));
        }
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    Eigen::JacobiSVD<EigenRowMajor> svd(to_eigen(m));
    std::vector<double> sv(svd.singularValues().size());
    for (std::size_t k = 0; k < sv.size(); ++k)
        sv[k] = svd.singularValues()(static_cast<Eigen::Index>(k));
    return sv;
}

StateVector load_state(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("state file: empty input");
    const std::string prefix = "n_qubits=";
    if (line.rfind(prefix, 0) != 0)
        throw std::invalid_argument("state file: first line must be n_qubits=<k>");
    int n = 0;
    {
        const char* b = line.data() + prefix.size();
        const char* e = line.data() + line.size();
        auto res = std::from_chars(b, e, n);
        if (res.ec != std::errc{} || res.ptr != e)
            throw std::invalid_argument("state file: malformed qubit count");
    }
    if (n < 1 || n > 6) throw std::invalid_argument("state file: n_qubits must be in [1, 6]");

    std::vector<Complex> amps;
    amps.reserve(std::size_t{1} << n);
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
        if (!std::getline(in, line))
            throw std::invalid_argument("state file: expected 2^n amplitude lines");
        std::istringstream ls(line);
        double re = 0.0, im = 0.0;
        if (!(ls >> re >> im))
            throw std::invalid_argument("state file: amplitude line must be `re im`");
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("state file: trailing tokens on amplitude line");
        amps.emplace_back(re, im);
    }

    double norm2 = 0.0;
    for (const auto& a : amps) norm2 += std::norm(a);
    const double norm = std::sqrt(norm2);
    if (std::abs(norm - 1.0) > 1e-6)
        throw std::invalid_argument("state file: norm deviates from 1 by more than 1e-6");
    for (auto& a : amps) a /= norm;
    return StateVector(n, std::move(amps));
}

StateVector load_state_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("state file: cannot open " + path);
    return load_state(f);
}

}  // namespace monolab
