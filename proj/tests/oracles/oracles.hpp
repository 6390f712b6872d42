// Copyright 2026 The coregap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Brute-force reference implementations used only by tests. Nothing here
// shares code paths with the library beyond the Statevector container.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "coregap/statevector.hpp"

namespace coregap::oracle {

/// Dense 2^n x 2^n Pauli string, letter q taken from paulis[q] (0=I,1=X,2=Y,3=Z),
/// qubit 0 least significant.
Eigen::MatrixXcd pauli_string(const std::vector<int>& paulis);

/// <psi|P|psi> by dense matrix-vector product.
double pauli_expectation(const Statevector& state, const std::vector<int>& paulis);

/// Reduced moments by enumerating every Pauli string as a dense matrix.
std::vector<double> reduced_moments(const Statevector& state);

/// Dense CZ(qa, qb) on n qubits.
Eigen::MatrixXcd cz_matrix(std::size_t n, std::size_t qa, std::size_t qb);

/// 4^n x 4^n transfer matrix T[Q][P] = |tr(Q U P U^dagger)|^2 / 4^n, strings
/// indexed by base-4 digits (0=I,1=X,2=Y,3=Z), qubit 0 least significant.
Eigen::MatrixXd pauli_transfer_squared(const Eigen::MatrixXcd& unitary, std::size_t n);

/// Lumps a 4^n transfer matrix onto the 3^n reduced classes (X,Y -> eps).
/// Target weights are summed; the source column is the average over class
/// members. Sets `consistent` false if class members disagree by > 1e-9.
Eigen::MatrixXd lump_to_reduced(const Eigen::MatrixXd& transfer, std::size_t n, bool* consistent = nullptr);

/// A (x) B with B on the least significant digits.
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Eigenvalues via Eigen's real Schur solver.
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m);

/// Lambda by the definition: the largest modulus among eigenvalues below 1 - tol.
double subleading_modulus(const Eigen::MatrixXd& m, double tol = 1e-8);

}  // namespace coregap::oracle
