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

#ifndef QCOP_LP_EXPORT_H_
#define QCOP_LP_EXPORT_H_

#include <ostream>
#include <string>

#include "qcop/model.h"

namespace qcop {

// CPLEX LP text for min c'x + x'Qx s.t. Dx >= 1, x binary. Variables are
// x1..xn. Quadratic terms go in a "[ ... ] / 2" block with doubled
// coefficients: one term per unordered pair when Q is symmetric, one per
// ordered pair otherwise.
void ExportLp(const QscpInstance& inst, std::ostream& out);
std::string ToLpString(const QscpInstance& inst);
void ExportLpFile(const QscpInstance& inst, const std::string& path);

}  // namespace qcop

#endif  // QCOP_LP_EXPORT_H_
