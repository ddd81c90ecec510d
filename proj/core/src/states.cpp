#include "monolab/states.hpp"

#include <cmath>
#include <stdexcept>

#include "monolab/rng.hpp"

namespace monolab {

WClassParams::WClassParams(double l1, double l2, double l3, double l4)
    : lambda1(l1), lambda2(l2), lambda3(l3), lambda4(l4) {
    if (l1 < 0 || l2 < 0 || l3 < 0 || l4 < 0)
        throw std::invalid_argument("WClassParams: amplitudes must be nonnegative");
    const double s = l1 * l1 + l2 * l2 + l3 * l3 + l4 * l4;
    if (std::abs(s - 1.0) > kValidationTol)
        throw std::invalid_argument("WClassParams: squared amplitudes must sum to 1 within 1e-10");
}

StateVector w_class_state(const WClassParams& p) {
    std::vector<Complex> amps(16);
    amps[0b1000] = p.lambda1;
    amps[0b0100] = p.lambda2;
    amps[0b0010] = p.lambda3;
    amps[0b0001] = p.lambda4;
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    const double n = std::sqrt(n2);
    for (auto& a : amps) a /= n;
    return StateVector(4, std::move(amps));
}

StateVector decoherence_free_state() {
    const double f = std::sqrt(2.0) / 2.0;
    const double half = 0.5;
    const double c = 1.0 / (2.0 * std::sqrt(3.0));
    const double g = 1.0 / std::sqrt(3.0);

    std::vector<Complex> amps(16);
    // (sqrt(2)/2) * [Phi0 + Phi1] expanded over A,B1,B2,B3.
    amps[0b0011] = f * g;
    amps[0b0101] = f * (half - c);
    amps[0b0110] = -f * (half + c);
    amps[0b1001] = -f * (half + c);
    amps[0b1010] = f * (half - c);
    amps[0b1100] = f * g;

    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    const double n = std::sqrt(n2);
    for (auto& a : amps) a /= n;
    return StateVector(4, std::move(amps));
}

StateVector random_pure_state(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 2 || n_qubits > 6)
        throw std::invalid_argument("random_pure_state: n_qubits must be in [2, 6]");
    Rng rng(seed);
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    double n2 = 0.0;
    for (auto& a : amps) {
        a = Complex(rng.normal(), rng.normal());
        n2 += std::norm(a);
    }
    const double n = std::sqrt(n2);
    for (auto& a : amps) a /= n;
    return StateVector(n_qubits, std::move(amps));
}

}  // namespace monolab
