// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#include "qvault/attacks/optimizer.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qvault/common/errors.hpp"
#include "qvault/common/tolerances.hpp"

namespace qvault::attacks {

using qsim::Basis;
using qsim::CMat;
using qsim::CVec;

namespace {

constexpr int kIn = 2;
constexpr int kOut = 4;
constexpr int kChoiDim = kIn * kOut;

CVec single_state(Basis b, int bit)
{
    auto amps = qsim::basis_state(b, bit);
    CVec v(2);
    v(0) = amps[0];
    v(1) = amps[1];
    return v;
}

// objective matrix: f(J) = Tr(F J) is the average double-pass probability
const CMat& objective_matrix()
{
    static const CMat f = [] {
        CMat out = CMat::Zero(kChoiDim, kChoiDim);
        for (Basis b : {Basis::Computational, Basis::Diagonal})
            for (int bit = 0; bit < 2; ++bit)
            {
                const CVec psi = single_state(b, bit);
                CVec pair(kOut);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        pair(i * 2 + j) = psi(i) * psi(j);
                for (int i = 0; i < kIn; ++i)
                    for (int j = 0; j < kIn; ++j)
                        for (int o = 0; o < kOut; ++o)
                            for (int p = 0; p < kOut; ++p)
                                out(i * kOut + o, j * kOut + p) +=
                                    0.25 * std::conj(psi(i)) * psi(j) * pair(o) * std::conj(pair(p));
            }
        return out;
    }();
    return f;
}

double objective(const CMat& choi)
{
    return (objective_matrix() * choi).trace().real();
}

CMat clip_to_psd(const CMat& m)
{
    Eigen::SelfAdjointEigenSolver<CMat> es((m + m.adjoint()) * 0.5);
    Eigen::VectorXd vals = es.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        vals(i) = std::max(vals(i), 0.0);
    return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace

CMat choi_of_channel(const qsim::KrausChannel& channel)
{
    if (channel.in_dim() != kIn || channel.out_dim() != kOut)
        throw DimensionError("choi_of_channel: expected a one-to-two qubit channel");
    CMat choi = CMat::Zero(kChoiDim, kChoiDim);
    for (const CMat& k : channel.ops())
    {
        CVec vec(kChoiDim);
        for (int i = 0; i < kIn; ++i)
            for (int o = 0; o < kOut; ++o)
                vec(i * kOut + o) = k(o, i);
        choi += vec * vec.adjoint();
    }
    return choi;
}

CMat partial_trace_out(const CMat& choi)
{
    CMat traced = CMat::Zero(kIn, kIn);
    for (int i = 0; i < kIn; ++i)
        for (int j = 0; j < kIn; ++j)
            for (int o = 0; o < kOut; ++o)
                traced(i, j) += choi(i * kOut + o, j * kOut + o);
    return traced;
}

qsim::KrausChannel channel_of_choi(const CMat& choi)
{
    Eigen::SelfAdjointEigenSolver<CMat> es((choi + choi.adjoint()) * 0.5);
    std::vector<CMat> ops;
    for (Eigen::Index e = 0; e < es.eigenvalues().size(); ++e)
    {
        const double lambda = es.eigenvalues()(e);
        if (lambda <= 1e-12)
            continue;
        CMat k = CMat::Zero(kOut, kIn);
        for (int i = 0; i < kIn; ++i)
            for (int o = 0; o < kOut; ++o)
                k(o, i) = std::sqrt(lambda) * es.eigenvectors()(i * kOut + o, e);
        ops.push_back(std::move(k));
    }
    return qsim::KrausChannel(std::move(ops));
}

CMat project_cptp(CMat choi, double eps, int max_rounds)
{
    for (int round = 0; round < max_rounds; ++round)
    {
        choi = clip_to_psd(choi);
        const CMat residual = partial_trace_out(choi) - CMat::Identity(kIn, kIn);
        if (residual.cwiseAbs().maxCoeff() <= eps)
            return choi; // PSD exactly by construction, TP within eps
        // orthogonal projection onto the trace-preservation affine set
        CMat shift = CMat::Zero(kChoiDim, kChoiDim);
        for (int i = 0; i < kIn; ++i)
            for (int j = 0; j < kIn; ++j)
                for (int o = 0; o < kOut; ++o)
                    shift(i * kOut + o, j * kOut + o) = residual(i, j) / static_cast<double>(kOut);
        choi -= shift;
    }
    throw Error("project_cptp: alternating projections did not converge");
}

ClonerResult optimize_cloner(int iterations, double tolerance)
{
    if (iterations < 1)
        throw Error("optimize_cloner: iteration budget must be positive");
    if (tolerance <= 0)
        throw Error("optimize_cloner: tolerance must be positive");

    const double eps_feasible = 1e-9;
    CMat choi = project_cptp(choi_of_channel(attack_keep_and_fabricate().channel), eps_feasible);
    double best = objective(choi);

    std::vector<double> trace{best};
    bool converged = false;
    double step = 2.0;
    int plateau = 0;
    for (int iter = 0; iter < iterations; ++iter)
    {
        const CMat candidate = project_cptp(choi + step * objective_matrix(), eps_feasible);
        const double value = objective(candidate);
        if (value >= best - 1e-12)
        {
            const double gain = value - best;
            choi = candidate;
            best = value;
            trace.push_back(best);
            plateau = gain < tolerance ? plateau + 1 : 0;
            if (plateau >= 8)
            {
                converged = true;
                break;
            }
            step = std::min(step * 1.25, 16.0);
        }
        else
        {
            step *= 0.5;
            if (step < 1e-7)
            {
                converged = true;
                break;
            }
        }
    }

    CMat final_choi = project_cptp(choi, 1e-10);
    AttackChannel channel{channel_of_choi(final_choi), "optimized-cloner"};
    const double achieved = per_qubit_success(channel);
    return ClonerResult{std::move(channel), achieved, converged, std::move(trace), std::move(final_choi)};
}

} // namespace qvault::attacks
