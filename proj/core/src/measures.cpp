#include "monolab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monolab {

namespace {

// Y (x) Y in the computational basis: antidiagonal (-1, 1, 1, -1).
const ComplexMatrix& spin_flip_operator() {
    static const ComplexMatrix yy = [] {
        ComplexMatrix m(4, 4);
        m(0, 3) = -1.0;
        m(1, 2) = 1.0;
        m(2, 1) = 1.0;
        m(3, 0) = -1.0;
        return m;
    }();
    return yy;
}

double clamp_unit(double v, const char* what) {
    if (v < -kReportedValueTol || v > 1.0 + kReportedValueTol)
        throw std::domain_error(std::string(what) + ": value outside [0,1] beyond tolerance");
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace

std::string to_string(MeasureKind kind) {
    return kind == MeasureKind::concurrence ? "concurrence" : "coa";
}

double pure_concurrence(const StateVector& psi, const PartitionSpec& spec) {
    if (spec.total != psi.n_qubits())
        throw std::invalid_argument("pure_concurrence: partition does not match state size");
    const ComplexMatrix reduced = partial_trace(density_matrix(psi), spec);
    double purity = 0.0;
    for (const auto& e : reduced.entries()) purity += std::norm(e);
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

std::array<double, 4> spin_flip_mus(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("spin_flip_mus: expected a two-qubit (4x4) state");
    rho.validate_density();

    // Work on the numerical support of rho: with rho = W W+ (columns
    // w_i = sqrt(l_i) u_i), the mus are the singular values of the symmetric
    // matrix tau = W^T (Y (x) Y) W. This avoids sqrt(eps) noise from the
    // null space that the sqrt(rho)-based route picks up on rank-deficient
    // states.
    const auto sys = hermitian_eigensystem(rho);
    const double cut = 1e-12 * std::max(sys.eigenvalues[0], 0.0);
    std::size_t rank = 0;
    while (rank < 4 && sys.eigenvalues[rank] > cut) ++rank;

    ComplexMatrix support(4, rank);
    for (std::size_t k = 0; k < rank; ++k) {
        const double scale = std::sqrt(sys.eigenvalues[k]);
        for (std::size_t i = 0; i < 4; ++i) support(i, k) = scale * sys.eigenvectors(i, k);
    }

    const auto& yy = spin_flip_operator();
    ComplexMatrix tau(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            Complex sum = 0.0;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b)
                    sum += support(a, i) * yy(a, b) * support(b, j);
            tau(i, j) = sum;
        }

    const auto sv = singular_values(tau);
    std::array<double, 4> mus{};
    for (std::size_t k = 0; k < sv.size(); ++k) mus[k] = sv[k];
    return mus;
}

double two_qubit_concurrence(const ComplexMatrix& rho) {
    const auto mu = spin_flip_mus(rho);
    return clamp_unit(std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]), "two_qubit_concurrence");
}

double two_qubit_coa(const ComplexMatrix& rho) {
    const auto mu = spin_flip_mus(rho);
    return clamp_unit(mu[0] + mu[1] + mu[2] + mu[3], "two_qubit_coa");
}

double linear_entropy(const ComplexMatrix& rho) {
    rho.validate_density();
    double purity = 0.0;
    for (const auto& e : rho.entries()) purity += std::norm(e);
    return 1.0 - purity;
}

MeasureVector pairwise_measures(const StateVector& psi, int anchor, MeasureKind kind) {
    const int n = psi.n_qubits();
    if (n < 3) throw std::invalid_argument("pairwise_measures: need at least 3 qubits");
    if (anchor < 0 || anchor >= n)
        throw std::invalid_argument("pairwise_measures: anchor out of range");

    const ComplexMatrix rho = density_matrix(psi);
    MeasureVector out;
    out.kind = kind;
    out.anchor = anchor;
    for (int partner = 0; partner < n; ++partner) {
        if (partner == anchor) continue;
        std::vector<int> keep{std::min(anchor, partner), std::max(anchor, partner)};
        const ComplexMatrix pair = partial_trace(rho, PartitionSpec(keep, n));
        out.partners.push_back(partner);
        out.values.push_back(kind == MeasureKind::concurrence ? two_qubit_concurrence(pair)
                                                              : two_qubit_coa(pair));
    }
    return out;
}

std::string qubit_label(int q) {
    return q == 0 ? std::string("A") : "B" + std::to_string(q);
}

int parse_qubit_label(const std::string& label, int n_qubits) {
    if (label == "A" || label == "a") return 0;
    if ((label.size() >= 2) && (label[0] == 'B' || label[0] == 'b')) {
        const int i = std::stoi(label.substr(1));
        if (i >= 1 && i < n_qubits) return i;
    }
    throw std::invalid_argument("unknown qubit label: " + label);
}

}  // namespace monolab
