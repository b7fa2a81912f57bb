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

#ifndef TOMAGA_STAG_HUNT_H_
#define TOMAGA_STAG_HUNT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tomaga {

// Binary behaviour label used by every matrix-form code path. Matrix games
// never produce an unknown label, so they take this type instead of
// PolicyLabel.
enum class Label : std::uint8_t { kCooperative = 0, kUncooperative = 1 };

inline constexpr std::array<Label, 2> kLabels = {Label::kCooperative,
                                                 Label::kUncooperative};

// Label revealed at the end of an episode. kUnknown only comes out of the
// grid-world labeling rules.
enum class PolicyLabel : std::uint8_t {
  kCooperative = 0,
  kUncooperative = 1,
  kUnknown = 2,
};

constexpr PolicyLabel ToPolicyLabel(Label label) {
  return label == Label::kCooperative ? PolicyLabel::kCooperative
                                      : PolicyLabel::kUncooperative;
}

// Empty for kUnknown.
std::optional<Label> ToLabel(PolicyLabel label);

char LabelChar(Label label);
char LabelChar(PolicyLabel label);
std::string_view LabelName(PolicyLabel label);

// Symmetric 2x2 Stag Hunt material rewards with h > c > m > g:
//
//          C       U
//   C    h, h    g, c
//   U    c, g    m, m
class PayoffMatrix {
 public:
  // Throws std::invalid_argument naming the first pair that breaks the
  // strict ordering.
  static PayoffMatrix Create(double h, double c, double m, double g);

  double h() const { return h_; }
  double c() const { return c_; }
  double m() const { return m_; }
  double g() const { return g_; }

  // Reward of the player choosing `own` when the other chooses `other`.
  double Payoff(Label own, Label other) const;

  bool operator==(const PayoffMatrix&) const = default;

 private:
  PayoffMatrix(double h, double c, double m, double g)
      : h_(h), c_(c), m_(m), g_(g) {}

  double h_;
  double c_;
  double m_;
  double g_;
};

// Same as PayoffMatrix::Create; kept as a free function for call sites that
// read like validation.
PayoffMatrix ValidatePayoffs(double h, double c, double m, double g);

double Payoff(const PayoffMatrix& matrix, Label own, Label other);

// Throws std::invalid_argument if either label is kUnknown.
double Payoff(const PayoffMatrix& matrix, PolicyLabel own, PolicyLabel other);

struct JointOutcome {
  Label self = Label::kCooperative;
  Label other = Label::kCooperative;

  bool operator==(const JointOutcome&) const = default;
};

}  // namespace tomaga

#endif  // TOMAGA_STAG_HUNT_H_
