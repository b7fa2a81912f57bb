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

#include "tomaga/stag_hunt.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tomaga {
namespace {

void RequireGreater(const char* lhs_name, double lhs, const char* rhs_name,
                    double rhs) {
  if (!(lhs > rhs)) {
    std::ostringstream msg;
    msg << "payoff ordering h > c > m > g violated: " << lhs_name << " ("
        << lhs << ") must be greater than " << rhs_name << " (" << rhs << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

std::optional<Label> ToLabel(PolicyLabel label) {
  switch (label) {
    case PolicyLabel::kCooperative:
      return Label::kCooperative;
    case PolicyLabel::kUncooperative:
      return Label::kUncooperative;
    case PolicyLabel::kUnknown:
      return std::nullopt;
  }
  return std::nullopt;
}

char LabelChar(Label label) {
  return label == Label::kCooperative ? 'C' : 'U';
}

char LabelChar(PolicyLabel label) {
  switch (label) {
    case PolicyLabel::kCooperative:
      return 'C';
    case PolicyLabel::kUncooperative:
      return 'U';
    case PolicyLabel::kUnknown:
      return '?';
  }
  return '?';
}

std::string_view LabelName(PolicyLabel label) {
  switch (label) {
    case PolicyLabel::kCooperative:
      return "C";
    case PolicyLabel::kUncooperative:
      return "U";
    case PolicyLabel::kUnknown:
      return "unknown";
  }
  return "unknown";
}

PayoffMatrix PayoffMatrix::Create(double h, double c, double m, double g) {
  for (double v : {h, c, m, g}) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("payoff values must be finite");
    }
  }
  RequireGreater("h", h, "c", c);
  RequireGreater("c", c, "m", m);
  RequireGreater("m", m, "g", g);
  return PayoffMatrix(h, c, m, g);
}

double PayoffMatrix::Payoff(Label own, Label other) const {
  if (own == Label::kCooperative) {
    return other == Label::kCooperative ? h_ : g_;
  }
  return other == Label::kCooperative ? c_ : m_;
}

PayoffMatrix ValidatePayoffs(double h, double c, double m, double g) {
  return PayoffMatrix::Create(h, c, m, g);
}

double Payoff(const PayoffMatrix& matrix, Label own, Label other) {
  return matrix.Payoff(own, other);
}

double Payoff(const PayoffMatrix& matrix, PolicyLabel own, PolicyLabel other) {
  const std::optional<Label> own_label = ToLabel(own);
  const std::optional<Label> other_label = ToLabel(other);
  if (!own_label || !other_label) {
    throw std::invalid_argument("payoff is undefined for an unknown label");
  }
  return matrix.Payoff(*own_label, *other_label);
}

}  // namespace tomaga
