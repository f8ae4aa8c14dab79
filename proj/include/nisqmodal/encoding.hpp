#pragma once

#include <Eigen/Dense>

#include "nisqmodal/circuit.hpp"

namespace nisqmodal {

// Builds a circuit that maps |0...0> to the amplitudes of a real unit
// vector of power-of-two length. A binary tree of multiplexed ry rotations
// is expanded into elementary ry + cnot gates via Gray-code angle mixing;
// rotations with |angle| <= elision_tol are dropped together with the cnots
// they render redundant. Signs land in the last rotation layer, so the
// prepared state equals v exactly (not merely up to global sign).
//
// Worst case for a dense vector of length N: N - 1 rotations and N - 2
// cnots. Throws std::invalid_argument for a non-unit or
// non-power-of-two-length input.
Circuit synthesize_encoding(const Eigen::Ref<const Eigen::VectorXd>& v,
                            double elision_tol = 1e-12);

}  // namespace nisqmodal
