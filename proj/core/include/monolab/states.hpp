#pragma once

#include <cstdint>

#include "monolab/linalg.hpp"

namespace monolab {

/// Amplitudes of the 4-qubit generalized W-class family; nonnegative with
/// unit sum of squares (within 1e-10).
struct WClassParams {
    double lambda1, lambda2, lambda3, lambda4;

    WClassParams(double l1, double l2, double l3, double l4);
};

/// lambda1|1000> + lambda2|0100> + lambda3|0010> + lambda4|0001>
/// on qubits (A, B1, B2, B3); output exactly normalized.
StateVector w_class_state(const WClassParams& p);

/// The 4-qubit entangled decoherence-free state
///   (sqrt(2)/2)|Phi0> + (sqrt(2)/2)|Phi1>,
/// |Phi0> = (1/2)(|01>-|10>)_{AB1} (|01>-|10>)_{B2B3},
/// |Phi1> = (1/(2 sqrt(3)))(2|1100> + 2|0011> - |1010> - |1001> - |0101> - |0110>).
StateVector decoherence_free_state();

/// Haar-distributed pure state: independent standard complex Gaussian
/// amplitudes, normalized. Deterministic for a fixed seed. 2 <= n_qubits <= 6.
StateVector random_pure_state(int n_qubits, std::uint64_t seed);

}  // namespace monolab
