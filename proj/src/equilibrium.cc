// Copyright 2026 The ToMAGA Workbench Authors
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

#include "tomaga/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tomaga {
namespace {

double Guilt(double theta, double phi, double other_material) {
  return -theta * std::max(0.0, phi - other_material);
}

void CheckPhi(const PayoffMatrix& matrix, double phi, const char* name) {
  if (!std::isfinite(phi) || phi < matrix.g() || phi > matrix.h()) {
    std::ostringstream msg;
    msg << name << " = " << phi << " lies outside [g, h] = [" << matrix.g()
        << ", " << matrix.h() << "]";
    throw std::invalid_argument(msg.str());
  }
}

// True when `player` (0 row, 1 col) can gain more than the tolerance by
// switching labels while the other player stays put.
bool HasProfitableDeviation(const TransformedGame& game, Label row, Label col,
                            int player) {
  auto flip = [](Label l) {
    return l == Label::kCooperative ? Label::kUncooperative
                                    : Label::kCooperative;
  };
  if (player == 0) {
    return game.at(flip(row), col).row - game.at(row, col).row >
           kPayoffTolerance;
  }
  return game.at(row, flip(col)).col - game.at(row, col).col >
         kPayoffTolerance;
}

bool C1(const PayoffMatrix& m, double phi, double theta) {
  return m.h() - theta * std::max(0.0, phi - m.h()) >
         m.c() - theta * std::max(0.0, phi - m.g());
}

bool C2(const PayoffMatrix& m, double phi, double theta) {
  return m.g() - theta * std::max(0.0, phi - m.c()) >
         m.m() - theta * std::max(0.0, phi - m.m());
}

}  // namespace

TransformedGame TransformGame(const PayoffMatrix& matrix, double phi_row,
                              double phi_col, double theta_row,
                              double theta_col) {
  CheckPhi(matrix, phi_row, "phi_row");
  CheckPhi(matrix, phi_col, "phi_col");
  if (!(theta_row > 0.0) || !(theta_col > 0.0)) {
    throw std::invalid_argument("guilt sensitivities must be > 0");
  }
  TransformedGame game{matrix, {}, phi_row, phi_col, theta_row, theta_col};
  for (Label row : kLabels) {
    for (Label col : kLabels) {
      const double r_row = matrix.Payoff(row, col);
      const double r_col = matrix.Payoff(col, row);
      game.cells[2 * static_cast<int>(row) + static_cast<int>(col)] = {
          r_row + Guilt(theta_row, phi_row, r_col),
          r_col + Guilt(theta_col, phi_col, r_row)};
    }
  }
  return game;
}

TransformedGame MaterialGame(const PayoffMatrix& matrix) {
  TransformedGame game{matrix, {}, matrix.g(), matrix.g(), 0.0, 0.0};
  for (Label row : kLabels) {
    for (Label col : kLabels) {
      game.cells[2 * static_cast<int>(row) + static_cast<int>(col)] = {
          matrix.Payoff(row, col), matrix.Payoff(col, row)};
    }
  }
  return game;
}

EquilibriumReport PureNash(const TransformedGame& game) {
  EquilibriumReport report;
  for (Label row : kLabels) {
    for (Label col : kLabels) {
      if (!HasProfitableDeviation(game, row, col, 0) &&
          !HasProfitableDeviation(game, row, col, 1)) {
        report.pure_equilibria.emplace_back(row, col);
      }
    }
  }
  report.is_unique_cc =
      report.pure_equilibria.size() == 1 &&
      report.pure_equilibria.front() ==
          JointLabel{Label::kCooperative, Label::kCooperative};
  const PayoffMatrix& m = game.material;
  report.c1_holds = C1(m, game.phi_row, game.theta_row) &&
                    C1(m, game.phi_col, game.theta_col);
  report.c2_holds = C2(m, game.phi_row, game.theta_row) &&
                    C2(m, game.phi_col, game.theta_col);
  report.threshold_theta = CooperationThreshold(m, game.phi_row);
  report.threshold_theta_col = CooperationThreshold(m, game.phi_col);
  return report;
}

double CooperationThreshold(const PayoffMatrix& matrix, double phi) {
  if (!(phi > matrix.m())) return std::numeric_limits<double>::infinity();
  return (matrix.m() - matrix.g()) / (std::min(phi, matrix.c()) - matrix.m());
}

bool ThresholdConditionHolds(const PayoffMatrix& matrix, double phi,
                             double theta) {
  if (!(phi > matrix.m())) return false;
  const double denom = std::min(phi, matrix.c()) - matrix.m();
  return theta > (matrix.m() - matrix.g() + kPayoffTolerance) / denom;
}

double GuiltThresholdF(const PayoffMatrix& matrix, double theta) {
  if (!(theta > 0.0)) {
    throw std::invalid_argument("f(theta) requires theta > 0");
  }
  return matrix.m() + (matrix.m() - matrix.g()) / theta;
}

ThresholdAgreementCheck CheckThresholdAgreement(
    const PayoffMatrix& matrix, std::span<const double> phi_grid,
    std::span<const double> theta_grid) {
  ThresholdAgreementCheck check;
  for (double phi : phi_grid) {
    if (!(phi > matrix.m())) continue;
    for (double theta : theta_grid) {
      const TransformedGame game =
          TransformGame(matrix, phi, phi, theta, theta);
      const bool brute = PureNash(game).is_unique_cc;
      const bool formula = ThresholdConditionHolds(matrix, phi, theta);
      ++check.cells_checked;
      if (brute != formula) ++check.mismatches;
    }
  }
  return check;
}

bool VerifyThresholdAgreement(const PayoffMatrix& matrix,
                              std::span<const double> phi_grid,
                              std::span<const double> theta_grid) {
  return CheckThresholdAgreement(matrix, phi_grid, theta_grid).holds();
}

std::vector<double> OpenClosedGrid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("grid requires hi > lo and step > 0");
  }
  std::vector<double> grid;
  const double slack = step * 1e-6;
  for (long k = 1;; ++k) {
    const double v = lo + static_cast<double>(k) * step;
    if (v > hi + slack) break;
    grid.push_back(std::min(v, hi));
  }
  return grid;
}

}  // namespace tomaga
