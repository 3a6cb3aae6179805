// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qvault/qsim/basis.hpp"
#include "qvault/qsim/distribution.hpp"

namespace qvault::qsim {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Mixed-state arithmetic for the adversary side. Honest protocol flows never
// touch these types; they exist so counterfeiting channels can be evaluated
// exactly.
class DensityMatrix {
public:
    // validates Hermiticity, positive semidefiniteness and unit trace
    static DensityMatrix from_matrix(CMat m);
    static DensityMatrix from_pure(const CVec& psi);
    static DensityMatrix from_pure(const std::vector<Amplitude>& amps);
    static DensityMatrix maximally_mixed(int dim);

    const CMat& matrix() const { return m_; }
    int dim() const { return static_cast<int>(m_.rows()); }

    DensityMatrix tensor(const DensityMatrix& other) const;

private:
    explicit DensityMatrix(CMat m) : m_(std::move(m)) {}
    CMat m_;
};

// Completely positive map in Kraus form; construction checks the
// trace-preservation identity sum K'K == I.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<CMat> ops);

    const std::vector<CMat>& ops() const { return ops_; }
    int in_dim() const { return in_dim_; }
    int out_dim() const { return out_dim_; }

    static KrausChannel identity(int dim);
    static KrausChannel depolarizing_qubit();

private:
    std::vector<CMat> ops_;
    int in_dim_ = 0;
    int out_dim_ = 0;
};

// Phi(rho) = sum K rho K'
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch);

// exact measurement distribution of a mixed register in a product basis
OutcomeDistribution outcome_distribution(const DensityMatrix& rho, const std::vector<Basis>& bases);

// single-qubit product vector |e(bases[0], bits word)> ... as a dim-2^n vector
CVec product_basis_vector(const std::vector<Basis>& bases, uint32_t word);

} // namespace qvault::qsim
