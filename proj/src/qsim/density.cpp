// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/qsim/density.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qvault/common/errors.hpp"
#include "qvault/common/tolerances.hpp"

namespace qvault::qsim {

namespace {

void validate_density(const CMat& m)
{
    if (m.rows() != m.cols() || m.rows() < 1)
        throw DimensionError("DensityMatrix: matrix must be square");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw Error("DensityMatrix: matrix not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > tol::kNorm || std::abs(m.trace().imag()) > tol::kNorm)
        throw Error("DensityMatrix: trace not 1");
    Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol::kDensityPsd)
        throw Error("DensityMatrix: matrix not positive semidefinite");
}

} // namespace

DensityMatrix DensityMatrix::from_matrix(CMat m)
{
    validate_density(m);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const CVec& psi)
{
    if (std::abs(psi.squaredNorm() - 1.0) > tol::kNorm)
        throw Error("DensityMatrix: state vector not normalized");
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::from_pure(const std::vector<Amplitude>& amps)
{
    CVec psi(static_cast<Eigen::Index>(amps.size()));
    for (size_t i = 0; i < amps.size(); ++i)
        psi(static_cast<Eigen::Index>(i)) = amps[i];
    return from_pure(psi);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim)
{
    if (dim < 1)
        throw DimensionError("DensityMatrix: dimension must be positive");
    CMat m = CMat::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const
{
    const CMat& a = m_;
    const CMat& b = other.m_;
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return DensityMatrix(std::move(out));
}

KrausChannel::KrausChannel(std::vector<CMat> ops) : ops_(std::move(ops))
{
    if (ops_.empty())
        throw DimensionError("KrausChannel: empty operator list");
    out_dim_ = static_cast<int>(ops_.front().rows());
    in_dim_ = static_cast<int>(ops_.front().cols());
    for (const CMat& k : ops_)
        if (k.rows() != out_dim_ || k.cols() != in_dim_)
            throw DimensionError("KrausChannel: inconsistent operator shapes");

    CMat sum = CMat::Zero(in_dim_, in_dim_);
    for (const CMat& k : ops_)
        sum += k.adjoint() * k;
    if ((sum - CMat::Identity(in_dim_, in_dim_)).cwiseAbs().maxCoeff() > tol::kKrausTp)
        throw Error("KrausChannel: operators are not trace preserving");
}

KrausChannel KrausChannel::identity(int dim)
{
    return KrausChannel({CMat::Identity(dim, dim)});
}

KrausChannel KrausChannel::depolarizing_qubit()
{
    // rho -> I/2 via the four operators |i><j| / sqrt(2)
    std::vector<CMat> ops;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
        {
            CMat k = CMat::Zero(2, 2);
            k(i, j) = 1.0 / std::sqrt(2.0);
            ops.push_back(std::move(k));
        }
    return KrausChannel(std::move(ops));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch)
{
    if (rho.dim() != ch.in_dim())
        throw DimensionError("apply_channel: channel input dimension mismatch");
    CMat out = CMat::Zero(ch.out_dim(), ch.out_dim());
    for (const CMat& k : ch.ops())
        out += k * rho.matrix() * k.adjoint();
    return DensityMatrix::from_matrix(std::move(out));
}

CVec product_basis_vector(const std::vector<Basis>& bases, uint32_t word)
{
    const int n = static_cast<int>(bases.size());
    CVec v = CVec::Ones(1);
    for (int q = 0; q < n; ++q)
    {
        const int bit = static_cast<int>((word >> (n - 1 - q)) & 1u);
        const auto single = basis_state(bases[static_cast<size_t>(q)], bit);
        CVec next(v.size() * 2);
        for (Eigen::Index j = 0; j < v.size(); ++j)
        {
            next(2 * j) = v(j) * single[0];
            next(2 * j + 1) = v(j) * single[1];
        }
        v = std::move(next);
    }
    return v;
}

OutcomeDistribution outcome_distribution(const DensityMatrix& rho, const std::vector<Basis>& bases)
{
    const int n = static_cast<int>(bases.size());
    if ((Eigen::Index{1} << n) != rho.dim())
        throw DimensionError("outcome_distribution: bases length mismatch");

    OutcomeDistribution dist;
    dist.qubits = n;
    const size_t size = size_t{1} << n;
    dist.probs.resize(size);
    dist.labels.resize(size);
    for (size_t w = 0; w < size; ++w)
    {
        const CVec e = product_basis_vector(bases, static_cast<uint32_t>(w));
        dist.probs[w] = std::max(0.0, (e.adjoint() * rho.matrix() * e)(0, 0).real());
        dist.labels[w] = static_cast<uint32_t>(w);
    }
    return dist;
}

} // namespace qvault::qsim
