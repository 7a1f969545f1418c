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

#include "qcop/transforms.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcop/error.h"
#include "qcop/linalg.h"
#include "qcop/rng.h"

namespace qcop {
namespace {

constexpr double kStructureTol = 1e-9;
constexpr double kDerivedTol = 1e-7;

void RequireDim(int expected, int actual, const char* what) {
  if (expected != actual) {
    throw DimensionError(std::string(what) + ": dimension " +
                         std::to_string(actual) + " != " +
                         std::to_string(expected));
  }
}

// Shared core of every diagonal-style rewrite: Q + Diag(u), c - u.
Representation ShiftDiagonal(const Representation& rep,
                             std::span<const double> u, ReprTag tag) {
  QMatrix q = rep.q();
  std::vector<double> c = rep.c().values();
  for (int i = 0; i < rep.n(); ++i) {
    q.at(i, i) += u[i];
    c[i] -= u[i];
  }
  q.Validate();
  return Representation(std::move(q), LinearCost(std::move(c)), std::move(tag));
}

}  // namespace

SkewSymmetric::SkewSymmetric(QMatrix y) : y_(std::move(y)) {
  for (int i = 0; i < y_.n(); ++i) {
    if (y_(i, i) != 0.0) {
      throw InvalidArgument("skew-symmetric matrix needs a zero diagonal");
    }
    for (int j = i + 1; j < y_.n(); ++j) {
      if (y_(i, j) != -y_(j, i)) {
        throw InvalidArgument("matrix is not skew-symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
      }
    }
  }
}

SkewSymmetric SkewSymmetric::SkewPart(const QMatrix& q) {
  QMatrix y(q.n());
  for (int i = 0; i < q.n(); ++i) {
    for (int j = i + 1; j < q.n(); ++j) {
      const double v = 0.5 * (q(i, j) - q(j, i));
      y.at(i, j) = v;
      y.at(j, i) = -v;
    }
  }
  return SkewSymmetric(std::move(y));
}

Representation TransposeRepr(const Representation& rep) {
  return Representation(rep.q().Transposed(), rep.c(),
                        ReprTag::Custom("transpose"));
}

Representation ConvexCombine(std::span<const Representation> reps,
                             std::span<const double> weights) {
  if (reps.empty()) throw InvalidArgument("no representations to combine");
  if (reps.size() != weights.size()) {
    throw DimensionError("one weight per representation is required");
  }
  double total = 0.0;
  for (double w : weights) total += w;
  if (std::abs(total) < 1e-12) {
    throw InvalidArgument("weights sum to zero");
  }
  const int n = reps[0].n();
  std::vector<double> q(static_cast<size_t>(n) * n, 0.0);
  std::vector<double> c(n, 0.0);
  for (size_t r = 0; r < reps.size(); ++r) {
    RequireDim(n, reps[r].n(), "ConvexCombine");
    const auto& qv = reps[r].q().values();
    for (size_t k = 0; k < q.size(); ++k) q[k] += weights[r] * qv[k];
    for (int j = 0; j < n; ++j) c[j] += weights[r] * reps[r].c()[j];
  }
  for (double& v : q) v /= total;
  for (double& v : c) v /= total;
  return Representation(QMatrix(n, std::move(q)), LinearCost(std::move(c)),
                        ReprTag::Custom("combination"));
}

Representation Symmetrize(const Representation& rep) {
  const QMatrix& q = rep.q();
  QMatrix s(q.n());
  for (int i = 0; i < q.n(); ++i) {
    s.at(i, i) = q(i, i);
    for (int j = i + 1; j < q.n(); ++j) {
      const double v = 0.5 * (q(i, j) + q(j, i));
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  }
  return Representation(std::move(s), rep.c(), {ReprKind::kSym, ""});
}

Representation Perturb(const Representation& rep, const SkewSymmetric& y,
                       const DiagonalPerturbation& u) {
  RequireDim(rep.n(), y.n(), "Perturb skew part");
  RequireDim(rep.n(), u.n(), "Perturb diagonal");
  Representation shifted = ShiftDiagonal(rep, u.u, ReprTag::Custom("perturb"));
  return Representation(shifted.q() + y.matrix(), shifted.c(),
                        shifted.tag());
}

Representation DiagonalAnnihilate(const Representation& rep) {
  std::vector<double> u = rep.q().diagonal();
  for (double& v : u) v = -v;
  return ShiftDiagonal(rep, u, ReprTag::Custom("dannil"));
}

Representation LinearAnnihilate(const Representation& rep) {
  return ShiftDiagonal(rep, rep.c().values(), ReprTag::Custom("lannil"));
}

double ShiftFor(const QMatrix& q, const ShiftPolicy& policy) {
  if (const auto* fixed = std::get_if<FixedShift>(&policy)) {
    if (!(fixed->m >= 0.0)) throw InvalidArgument("shift M must be >= 0");
    return fixed->m;
  }
  if (std::holds_alternative<GershgorinShift>(policy)) {
    double m = 0.0;
    for (int i = 0; i < q.n(); ++i) {
      double radius = 0.0;
      for (int j = 0; j < q.n(); ++j) {
        if (j != i) radius += std::abs(0.5 * (q(i, j) + q(j, i)));
      }
      m = std::max(m, radius - q(i, i));
    }
    return m;
  }
  if (!q.IsSymmetric()) {
    throw InvalidArgument(
        "smallest-eigenvalue shift needs a symmetric matrix; symmetrize first");
  }
  if (q.n() == 0) return 0.0;
  return std::max(0.0, -SymmetricEigenvalues(q).front());
}

Representation Convexify(const Representation& rep, const ShiftPolicy& policy) {
  const double m = ShiftFor(rep.q(), policy);
  return ShiftDiagonal(rep, std::vector<double>(rep.n(), m),
                       {ReprKind::kCnx, ""});
}

Representation Concavify(const Representation& rep, double m) {
  if (!(m >= 0.0)) throw InvalidArgument("shift M must be >= 0");
  return ShiftDiagonal(rep, std::vector<double>(rep.n(), -m),
                       {ReprKind::kCnv, ""});
}

Representation Triangularize(const Representation& rep) {
  const QMatrix& q = rep.q();
  QMatrix t(q.n());
  std::vector<double> c = rep.c().values();
  for (int i = 0; i < q.n(); ++i) {
    c[i] += q(i, i);
    for (int j = i + 1; j < q.n(); ++j) t.at(i, j) = q(i, j) + q(j, i);
  }
  t.Validate();
  return Representation(std::move(t), LinearCost(std::move(c)),
                        {ReprKind::kUt, ""});
}

Representation SymConvexify(const Representation& rep,
                            const ShiftPolicy& policy) {
  const Representation cnx = Convexify(Symmetrize(rep), policy);
  return Representation(cnx.q(), cnx.c(), {ReprKind::kSymi, ""});
}

std::vector<Representation> StandardRepresentations(const Representation& org,
                                                    double m) {
  Representation base(org.q(), org.c(), {ReprKind::kOrg, ""});
  std::vector<Representation> out;
  out.push_back(base);
  out.push_back(Symmetrize(base));
  out.push_back(Convexify(base, FixedShift{m}));
  out.push_back(Concavify(base, m));
  out.push_back(Triangularize(base));
  out.push_back(SymConvexify(base, FixedShift{m}));
  return out;
}

std::optional<DiagonalizableWitness> CheckDiagonalizable(const QMatrix& q) {
  for (int i = 0; i < q.n(); ++i) {
    for (int j = i + 1; j < q.n(); ++j) {
      if (std::abs(q(i, j) + q(j, i)) > kStructureTol) return std::nullopt;
    }
  }
  return DiagonalizableWitness{q, q.diagonal()};
}

std::optional<WeakSumDecomposition> CheckDiagonalizableCC(const QMatrix& q,
                                                          int k) {
  const int n = q.n();
  if (n < 3) {
    throw InvalidArgument("weak-sum recovery needs n >= 3");
  }
  if (k < 1) throw InvalidArgument("cardinality must be >= 1");
  auto s = [&](int i, int j) { return 0.5 * (q(i, j) + q(j, i)); };
  std::vector<double> g(n);
  // Indices 0..2 recover each other; the rest lean on 0 and 1.
  g[0] = 0.5 * (s(0, 1) + s(0, 2) - s(1, 2));
  g[1] = 0.5 * (s(1, 0) + s(1, 2) - s(0, 2));
  g[2] = 0.5 * (s(2, 0) + s(2, 1) - s(0, 1));
  for (int i = 3; i < n; ++i) g[i] = 0.5 * (s(i, 0) + s(i, 1) - s(0, 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(s(i, j) - (g[i] + g[j])) > kDerivedTol) return std::nullopt;
    }
  }
  std::vector<double> diagonal(n);
  for (int i = 0; i < n; ++i) diagonal[i] = 2.0 * (k - 1) * g[i] + q(i, i);
  return WeakSumDecomposition{std::move(g), SkewSymmetric::SkewPart(q),
                              std::move(diagonal)};
}

Representation PerturbByDiagonalizable(
    const Representation& rep, std::span<const DiagonalizableWitness> witnesses,
    std::span<const double> scalars) {
  if (witnesses.size() != scalars.size()) {
    throw DimensionError("one scalar per diagonalizable witness is required");
  }
  QMatrix q = rep.q();
  std::vector<double> c = rep.c().values();
  for (size_t w = 0; w < witnesses.size(); ++w) {
    const auto& wit = witnesses[w];
    RequireDim(rep.n(), wit.a.n(), "witness matrix");
    RequireDim(rep.n(), static_cast<int>(wit.d.size()), "witness diagonal");
    q += scalars[w] * wit.a;
    for (int j = 0; j < rep.n(); ++j) c[j] -= scalars[w] * wit.d[j];
  }
  return Representation(std::move(q), LinearCost(std::move(c)),
                        ReprTag::Custom("diagonalizable"));
}

Representation CardinalityPerturb(const Representation& rep, int k,
                                  const SkewSymmetric& y,
                                  const DiagonalPerturbation& u,
                                  std::span<const double> weak_sum_g) {
  const int n = rep.n();
  if (k < 1) throw InvalidArgument("cardinality must be >= 1");
  RequireDim(n, y.n(), "CardinalityPerturb skew part");
  RequireDim(n, u.n(), "CardinalityPerturb diagonal");
  RequireDim(n, static_cast<int>(weak_sum_g.size()), "weak-sum generator");
  QMatrix q = rep.q() + y.matrix();
  std::vector<double> c = rep.c().values();
  for (int i = 0; i < n; ++i) {
    q.at(i, i) += u.u[i];
    for (int j = 0; j < n; ++j) {
      if (j != i) q.at(i, j) += weak_sum_g[i] + weak_sum_g[j];
    }
    c[i] -= u.u[i] + 2.0 * (k - 1) * weak_sum_g[i];
  }
  q.Validate();
  return Representation(std::move(q), LinearCost(std::move(c)),
                        ReprTag::Custom("cc-perturb"));
}

void VerifyCvp(const CvpVector& v, std::span<const BinaryPoint> family) {
  for (const BinaryPoint& x : family) {
    RequireDim(static_cast<int>(v.a.size()), x.n(), "CVP vector");
    double ax = 0.0;
    for (int j = 0; j < x.n(); ++j) {
      if (x[j]) ax += v.a[j];
    }
    if (std::abs(ax - v.b) > kStructureTol) {
      throw InvalidArgument("constant value property fails at x = " +
                            x.ToString() + ": a.x = " + std::to_string(ax) +
                            ", expected " + std::to_string(v.b));
    }
  }
}

Representation CvpReformulate(const Representation& rep,
                              std::span<const CvpVector> vectors,
                              const DiagonalPerturbation& d,
                              std::span<const BinaryPoint> family) {
  const int n = rep.n();
  RequireDim(n, d.n(), "CVP diagonal");
  QMatrix q = rep.q();
  std::vector<double> c = rep.c().values();
  for (const CvpVector& v : vectors) {
    RequireDim(n, static_cast<int>(v.a.size()), "CVP vector");
    RequireDim(n, static_cast<int>(v.alpha.size()), "CVP multipliers");
    VerifyCvp(v, family);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        const double g = 0.5 * (v.alpha[i] * v.a[j] + v.a[i] * v.alpha[j]);
        q.at(i, j) += g;
        if (j != i) q.at(j, i) += g;
      }
      c[i] -= v.b * v.alpha[i];
    }
  }
  for (int i = 0; i < n; ++i) {
    q.at(i, i) += d.u[i];
    c[i] -= d.u[i];
  }
  q.Validate();
  return Representation(std::move(q), LinearCost(std::move(c)),
                        ReprTag::Custom("cvp"));
}

std::vector<BinaryPoint> SampleFeasible(const CoverSystem& system, int count,
                                        uint64_t seed) {
  if (!system.feasible()) {
    throw Infeasible("row " + std::to_string(system.first_empty_row() + 1) +
                     " is covered by no column");
  }
  SplitMix64 rng(seed);
  std::vector<BinaryPoint> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    BinaryPoint x(system.n());
    for (int j = 0; j < system.n(); ++j) x.set(j, rng.Next() >> 63);
    for (int i = 0; i < system.m(); ++i) {
      const auto cover = system.RowCover(i);
      const bool covered =
          std::any_of(cover.begin(), cover.end(), [&](int j) { return x[j]; });
      if (!covered) {
        const auto pick = rng.UniformInt(0, static_cast<int64_t>(cover.size()) - 1);
        x.set(cover[pick], true);
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

EquivalenceReport VerifyEquivalence(const Representation& r1,
                                    const Representation& r2,
                                    const CoverSystem& system,
                                    const EquivalenceOptions& options) {
  RequireDim(system.n(), r1.n(), "VerifyEquivalence first representation");
  RequireDim(system.n(), r2.n(), "VerifyEquivalence second representation");
  EquivalenceReport report;
  auto check = [&](const BinaryPoint& x) {
    if (!report.equivalent) return;
    ++report.points_checked;
    const double v1 = Evaluate(r1, x);
    const double v2 = Evaluate(r2, x);
    if (std::abs(v1 - v2) > options.tolerance) {
      report.equivalent = false;
      report.counterexample = x;
      report.value1 = v1;
      report.value2 = v2;
    }
  };
  if (system.n() <= options.exhaustive_cap) {
    ForEachFeasible(system, check, options.exhaustive_cap);
  } else {
    report.exhaustive = false;
    for (const BinaryPoint& x :
         SampleFeasible(system, options.samples, options.seed)) {
      check(x);
    }
  }
  return report;
}

}  // namespace qcop
