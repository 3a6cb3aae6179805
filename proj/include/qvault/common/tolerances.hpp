// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

namespace qvault::tol {

// All numeric tolerances live here so every module agrees on them.
inline constexpr double kNorm = 1e-9;       // unit norm / unit trace
inline constexpr double kKrausTp = 1e-7;    // sum K'K == I for a Kraus set
inline constexpr double kChoiTp = 1e-6;     // Choi partial-trace residual
inline constexpr double kChoiPsd = 1e-7;    // Choi eigenvalue floor
inline constexpr double kDensityPsd = 1e-9; // density-matrix eigenvalue floor

} // namespace qvault::tol
