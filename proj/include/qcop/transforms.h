// Copyright 2026 The qcop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCOP_TRANSFORMS_H_
#define QCOP_TRANSFORMS_H_

// Equivalence-preserving rewrites of (Q, c). Two representations are
// equivalent on a family F when c.x + x'Qx agrees at every x in F.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qcop/matrix.h"
#include "qcop/model.h"

namespace qcop {

// Skew-symmetric matrix Y (y_ij == -y_ji, zero diagonal). x'Yx == 0.
class SkewSymmetric {
 public:
  // Throws InvalidArgument unless y is exactly skew-symmetric.
  explicit SkewSymmetric(QMatrix y);
  static SkewSymmetric Zero(int n) { return SkewSymmetric(QMatrix(n)); }
  // 0.5 * (Q - Q').
  static SkewSymmetric SkewPart(const QMatrix& q);
  const QMatrix& matrix() const { return y_; }
  int n() const { return y_.n(); }

 private:
  QMatrix y_;
};

// Diagonal of a perturbation matrix U.
struct DiagonalPerturbation {
  std::vector<double> u;
  static DiagonalPerturbation Zero(int n) { return {std::vector<double>(n, 0.0)}; }
  int n() const { return static_cast<int>(u.size()); }
};

// A matrix A together with d such that x'Ax == d.x on the family it was
// derived for.
struct DiagonalizableWitness {
  QMatrix a;
  std::vector<double> d;
};

// Q == P + Y with P weak-sum (p_ij = g_i + g_j off the diagonal) and Y skew.
struct WeakSumDecomposition {
  std::vector<double> g;
  SkewSymmetric y;
  // Diagonalization for cardinality K: 2(K-1) g_i + q_ii.
  std::vector<double> diagonal;
};

// Linear cost with a.x == b on every feasible x; alpha are the multipliers
// used to build the symmetric perturbation 0.5 (alpha a' + a alpha').
struct CvpVector {
  std::vector<double> a;
  double b = 0.0;
  std::vector<double> alpha;
};

Representation TransposeRepr(const Representation& rep);

// Weighted mean of equivalent representations. Throws InvalidArgument for an
// empty list or when |sum(weights)| < 1e-12.
Representation ConvexCombine(std::span<const Representation> reps,
                             std::span<const double> weights);

Representation Symmetrize(const Representation& rep);

// Q' = Q + Y + Diag(u), c' = c - u.
Representation Perturb(const Representation& rep, const SkewSymmetric& y,
                       const DiagonalPerturbation& u);

// u_ii = -q_ii: zero diagonal, c' = c + diag(Q).
Representation DiagonalAnnihilate(const Representation& rep);

// u_ii = c_i: c' = 0, Q' = Q + Diag(c).
Representation LinearAnnihilate(const Representation& rep);

struct FixedShift {
  double m = 0.0;
};
struct GershgorinShift {};
struct EigenvalueShift {};
using ShiftPolicy = std::variant<FixedShift, GershgorinShift, EigenvalueShift>;

inline constexpr double kDefaultShift = 10000.0;

// The diagonal shift M a policy selects for `q`.
// Gershgorin: max_i(sum_{j!=i} |s_ij| - s_ii) on S = (Q+Q')/2, clamped at 0.
// Eigenvalue: max(0, -lambda_min(Q)); Q must be symmetric.
double ShiftFor(const QMatrix& q, const ShiftPolicy& policy);

// Q' = Q + M I, c' = c - M.
Representation Convexify(const Representation& rep,
                         const ShiftPolicy& policy = FixedShift{kDefaultShift});

// Q' = Q - M I, c' = c + M. M >= 0.
Representation Concavify(const Representation& rep, double m = kDefaultShift);

// Strictly upper triangular Q' with q'_ij = q_ij + q_ji; c' = c + diag(Q).
Representation Triangularize(const Representation& rep);

// Convexify(Symmetrize(rep)) tagged SYMI.
Representation SymConvexify(const Representation& rep,
                            const ShiftPolicy& policy = FixedShift{kDefaultShift});

// ORG, SYM, CNX(M), CNV(M), UT, SYMI(M) of one objective, in that order.
std::vector<Representation> StandardRepresentations(
    const Representation& org, double m = kDefaultShift);

// Witness iff Q - Diag(Q) is skew-symmetric within 1e-9. The witness is
// valid for every family, d = diag(Q).
std::optional<DiagonalizableWitness> CheckDiagonalizable(const QMatrix& q);

// Weak-sum plus skew decomposition for families of fixed cardinality k.
// Throws InvalidArgument for n < 3 or k < 1.
std::optional<WeakSumDecomposition> CheckDiagonalizableCC(const QMatrix& q,
                                                          int k);

// (Q + sum s_i A_i, c - sum s_i d_i).
Representation PerturbByDiagonalizable(
    const Representation& rep, std::span<const DiagonalizableWitness> witnesses,
    std::span<const double> scalars);

// Perturbation valid on families where every point has exactly k ones:
// Q' = Q + Y + U + P, c' = c - u - 2(k-1) g, with P the zero-diagonal
// weak-sum matrix generated by a = b = g.
Representation CardinalityPerturb(const Representation& rep, int k,
                                  const SkewSymmetric& y,
                                  const DiagonalPerturbation& u,
                                  std::span<const double> weak_sum_g);

// Throws InvalidArgument naming the first point of `family` where
// a.x != b (tolerance 1e-9).
void VerifyCvp(const CvpVector& v, std::span<const BinaryPoint> family);

// (Q + Diag(d) + sum G_i, c - sum b_i alpha_i - d) where
// G_i = 0.5 (alpha_i a_i' + a_i alpha_i'). Every vector is checked against
// `family` first.
Representation CvpReformulate(const Representation& rep,
                              std::span<const CvpVector> vectors,
                              const DiagonalPerturbation& d,
                              std::span<const BinaryPoint> family);

struct EquivalenceReport {
  bool equivalent = true;
  bool exhaustive = true;
  int64_t points_checked = 0;
  std::optional<BinaryPoint> counterexample;
  double value1 = 0.0;
  double value2 = 0.0;
};

struct EquivalenceOptions {
  double tolerance = 1e-7;
  int exhaustive_cap = kDefaultEnumerationCap;
  int samples = 10000;
  uint64_t seed = 0x5eed;
};

// Compares objectives on every feasible point (n <= exhaustive_cap) or on
// `samples` randomized greedy covers otherwise.
EquivalenceReport VerifyEquivalence(const Representation& r1,
                                    const Representation& r2,
                                    const CoverSystem& system,
                                    const EquivalenceOptions& options = {});

// Random feasible covers: each column on with probability 1/2, then every
// uncovered row gets a uniformly chosen covering column.
std::vector<BinaryPoint> SampleFeasible(const CoverSystem& system, int count,
                                        uint64_t seed);

}  // namespace qcop

#endif  // QCOP_TRANSFORMS_H_
