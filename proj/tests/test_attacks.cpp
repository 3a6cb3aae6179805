// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qvault/attacks/experiment.hpp"
#include "qvault/attacks/optimizer.hpp"
#include "qvault/common/errors.hpp"
#include "qvault/common/tolerances.hpp"

using namespace qvault;
using namespace qvault::attacks;
using qsim::CMat;

namespace {

bool within_sigma(double freq, double p, int64_t trials, double sigmas = 5.0)
{
    double se = std::sqrt(std::max(p * (1 - p), 1e-12) / static_cast<double>(trials));
    return std::abs(freq - p) <= sigmas * se;
}

} // namespace

TEST_CASE("keep-and-fabricate: half the verifications pass")
{
    auto attack = attack_keep_and_fabricate();
    CHECK(std::abs(per_qubit_success(attack) - 0.5) < 1e-9);
    CHECK(std::abs(exact_success(attack, 4) - 0.0625) < 1e-9);
    CHECK(exact_success(attack, 0) == doctest::Approx(1.0));

    // isometry: the channel output of any conjugate-coding state is a valid
    // density matrix (construction of DensityMatrix checks the invariants)
    for (const auto& rho : bb84_states())
        CHECK_NOTHROW(apply_channel(rho, attack.channel));
}

TEST_CASE("measure-and-resend in a random basis reaches 5/8 per qubit")
{
    auto attack = attack_measure_random_basis();
    CHECK(std::abs(per_qubit_success(attack) - 0.625) < 1e-9);
    CHECK(std::abs(exact_success(attack, 4) - 0.152587890625) < 1e-9);
    CHECK(std::abs(exact_success(attack, 2) - 0.390625) < 1e-9);
    CHECK_NOTHROW(apply_channel(bb84_states()[0], attack.channel));
}

TEST_CASE("exact_success rejects channels that are not one-to-two qubit maps")
{
    AttackChannel not_cloning{qsim::KrausChannel::identity(2), "identity"};
    CHECK_THROWS_AS(exact_success(not_cloning, 1), DimensionError);
}

TEST_CASE("choi round trip preserves channel behavior")
{
    for (auto attack : {attack_keep_and_fabricate(), attack_measure_random_basis()})
    {
        auto choi = choi_of_channel(attack.channel);
        CHECK((partial_trace_out(choi) - CMat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
        AttackChannel back{channel_of_choi(choi), attack.name};
        CHECK(std::abs(per_qubit_success(back) - per_qubit_success(attack)) < 1e-9);
    }
}

TEST_CASE("the optimized cloner reaches the 3/4 per-qubit ceiling")
{
    auto result = optimize_cloner(400, 1e-6);

    CHECK(result.achieved >= 0.7495);
    CHECK(result.achieved <= 0.7510);
    CHECK(result.converged);

    // the anchor start is keep-and-fabricate
    CHECK(result.objective_trace.front() == doctest::Approx(0.5).epsilon(1e-6));

    // ascent is monotone and never exceeds the semidefinite optimum
    double prev = 0.0;
    for (double v : result.objective_trace)
    {
        CHECK(v >= prev - 1e-9);
        CHECK(v <= 0.75 + 1e-3);
        prev = v;
    }

    // returned Choi matrix satisfies the channel constraints
    Eigen::SelfAdjointEigenSolver<CMat> es(result.choi);
    CHECK(es.eigenvalues().minCoeff() >= -tol::kChoiPsd);
    CHECK((partial_trace_out(result.choi) - CMat::Identity(2, 2)).cwiseAbs().maxCoeff()
          < tol::kChoiTp);

    CHECK(std::abs(exact_success(result.channel, 4) - 0.31640625) < 2e-3);

    CHECK_THROWS_AS(optimize_cloner(0, 1e-6), Error);
    CHECK_THROWS_AS(optimize_cloner(10, -1.0), Error);
}

TEST_CASE("attack ordering: fabricate < random basis < optimized")
{
    auto cloner = optimize_cloner(400, 1e-6);
    const double fab = per_qubit_success(attack_keep_and_fabricate());
    const double mrb = per_qubit_success(attack_measure_random_basis());
    CHECK(fab < mrb);
    CHECK(mrb < cloner.achieved);
}

TEST_CASE("experiment estimates track the exact evaluator")
{
    auto fab = attack_keep_and_fabricate();
    auto report = run_counterfeit_experiment(fab, 1, 20000, 11);
    CHECK(report.exact_rate == doctest::Approx(0.5));
    CHECK(within_sigma(report.estimated_rate, report.exact_rate, report.trials));

    auto report4 = run_counterfeit_experiment(fab, 4, 20000, 13);
    CHECK(report4.exact_rate == doctest::Approx(0.0625));
    CHECK(within_sigma(report4.estimated_rate, report4.exact_rate, report4.trials));

    auto mrb = run_counterfeit_experiment(attack_measure_random_basis(), 2, 20000, 17);
    CHECK(mrb.exact_rate == doctest::Approx(0.390625));
    CHECK(within_sigma(mrb.estimated_rate, mrb.exact_rate, mrb.trials));
}

TEST_CASE("single-trial experiments and bad arguments")
{
    auto fab = attack_keep_and_fabricate();
    auto tiny = run_counterfeit_experiment(fab, 1, 1, 3);
    CHECK((tiny.successes == 0 || tiny.successes == 1));
    CHECK_THROWS_AS(run_counterfeit_experiment(fab, 0, 10, 3), Error);
    CHECK_THROWS_AS(run_counterfeit_experiment(fab, 1, 0, 3), Error);
}

TEST_CASE("experiments are reproducible and trial-order independent")
{
    auto fab = attack_keep_and_fabricate();
    auto a = run_counterfeit_experiment(fab, 3, 5000, 99);
    auto b = run_counterfeit_experiment(fab, 3, 5000, 99);
    CHECK(a.successes == b.successes);
    auto c = run_counterfeit_experiment(fab, 3, 5000, 100);
    CHECK(a.successes != c.successes); // different stream, almost surely
}

TEST_CASE("estimator consistency across seeded batches")
{
    auto fab = attack_keep_and_fabricate();
    int consistent = 0;
    const int batches = 100;
    for (int i = 0; i < batches; ++i)
    {
        auto rep = run_counterfeit_experiment(fab, 2, 2000, 1000 + static_cast<uint64_t>(i));
        if (std::abs(rep.estimated_rate - rep.exact_rate) <= 5 * rep.stderr_rate)
            ++consistent;
    }
    CHECK(consistent >= 99);
}

TEST_CASE("experiment reports serialize with stable field order")
{
    auto rep = run_counterfeit_experiment(attack_keep_and_fabricate(), 2, 100, 5);
    auto j = to_json(rep);
    CHECK(j.dump().rfind("{\"attack\":", 0) == 0);
    CHECK(j.at("qubits").get<int>() == 2);
    CHECK(j.at("trials").get<int64_t>() == 100);
    CHECK(j.contains("estimated_rate"));
    CHECK(j.contains("exact_rate"));
    CHECK(j.contains("stderr"));
    CHECK(j.at("seed").get<uint64_t>() == 5);
}
