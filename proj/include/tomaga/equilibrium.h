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

#ifndef TOMAGA_EQUILIBRIUM_H_
#define TOMAGA_EQUILIBRIUM_H_

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tomaga/stag_hunt.h"

namespace tomaga {

// Absolute tolerance for payoff ties.
inline constexpr double kPayoffTolerance = 1e-9;

struct CellPayoffs {
  double row = 0.0;
  double col = 0.0;
  bool operator==(const CellPayoffs&) const = default;
};

// Stag Hunt after each player adds its guilt reward to every cell. phi_row
// is the row player's expectation of the column player's material value,
// and vice versa.
struct TransformedGame {
  PayoffMatrix material;
  std::array<CellPayoffs, 4> cells;
  double phi_row;
  double phi_col;
  double theta_row;
  double theta_col;

  const CellPayoffs& at(Label row, Label col) const {
    return cells[2 * static_cast<int>(row) + static_cast<int>(col)];
  }
};

// Throws std::invalid_argument if a phi lies outside [g, h] or a theta is
// not positive.
TransformedGame TransformGame(const PayoffMatrix& matrix, double phi_row,
                              double phi_col, double theta_row,
                              double theta_col);

// Material game viewed as a TransformedGame with no guilt term.
TransformedGame MaterialGame(const PayoffMatrix& matrix);

using JointLabel = std::pair<Label, Label>;  // (row, col)

struct EquilibriumReport {
  std::vector<JointLabel> pure_equilibria;
  bool is_unique_cc = false;
  // Dominance conditions evaluated directly; true only if they hold for
  // both players.
  bool c1_holds = false;
  bool c2_holds = false;
  // (m - g) / (min(phi, c) - m) for the row player; +inf when phi <= m.
  double threshold_theta = std::numeric_limits<double>::infinity();
  double threshold_theta_col = std::numeric_limits<double>::infinity();
};

// Brute force over the four joint labels. A cell is an equilibrium when no
// player gains more than kPayoffTolerance by deviating alone.
EquilibriumReport PureNash(const TransformedGame& game);

// Smallest theta (exclusive) that makes (C,C) the unique equilibrium for a
// player expecting `phi`; +inf when phi <= m.
double CooperationThreshold(const PayoffMatrix& matrix, double phi);

// Threshold test in theta-space with the payoff tolerance mapped through
// the denominator, so it agrees with PureNash on exact ties.
bool ThresholdConditionHolds(const PayoffMatrix& matrix, double phi,
                             double theta);

// f(theta) = m + (m - g) / theta.
double GuiltThresholdF(const PayoffMatrix& matrix, double theta);

struct ThresholdAgreementCheck {
  std::int64_t cells_checked = 0;  // cells with phi > m
  std::int64_t mismatches = 0;
  bool holds() const { return mismatches == 0; }
};

// For every (phi, theta) with phi > m, compares the threshold formula with
// brute-force enumeration on the symmetric transformed game.
ThresholdAgreementCheck CheckThresholdAgreement(
    const PayoffMatrix& matrix, std::span<const double> phi_grid,
    std::span<const double> theta_grid);

bool VerifyThresholdAgreement(const PayoffMatrix& matrix,
                              std::span<const double> phi_grid,
                              std::span<const double> theta_grid);

// lo + k * step for k = 1, 2, ... while the value stays <= hi (with a small
// slack so hi itself is included when it lands on the grid).
std::vector<double> OpenClosedGrid(double lo, double hi, double step);

}  // namespace tomaga

#endif  // TOMAGA_EQUILIBRIUM_H_
