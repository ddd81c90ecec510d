#pragma once

#include <array>
#include <string>
#include <vector>

#include "monolab/linalg.hpp"

namespace monolab {

enum class MeasureKind { concurrence, coa };

std::string to_string(MeasureKind kind);

/// Pairwise measure values anchored at one qubit, partner order ascending.
struct MeasureVector {
    MeasureKind kind = MeasureKind::concurrence;
    int anchor = 0;
    std::vector<int> partners;
    std::vector<double> values;
};

/// Concurrence of a pure state across the bipartition keep|rest:
/// sqrt(2 [1 - Tr(rho_keep^2)]).
double pure_concurrence(const StateVector& psi, const PartitionSpec& spec);

/// Square roots of the eigenvalues of sqrt(rho) * rho~ * sqrt(rho), descending,
/// where rho~ = (Y (x) Y) rho* (Y (x) Y) is the spin-flipped state.
std::array<double, 4> spin_flip_mus(const ComplexMatrix& rho);

/// Two-qubit mixed-state concurrence, max(0, mu1 - mu2 - mu3 - mu4).
double two_qubit_concurrence(const ComplexMatrix& rho);

/// Two-qubit concurrence of assistance, mu1 + mu2 + mu3 + mu4.
double two_qubit_coa(const ComplexMatrix& rho);

/// 1 - Tr(rho^2)
double linear_entropy(const ComplexMatrix& rho);

/// Traces psi down to each (anchor, partner) pair and evaluates the requested
/// two-qubit measure; partner order is ascending label. Requires >= 3 qubits.
MeasureVector pairwise_measures(const StateVector& psi, int anchor, MeasureKind kind);

/// Qubit labels used in reports: 0 -> "A", i -> "B<i>".
std::string qubit_label(int q);
int parse_qubit_label(const std::string& label, int n_qubits);

}  // namespace monolab
