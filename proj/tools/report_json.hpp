// Copyright 2026 The lapdom Authors
//
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

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "lapdom/dominance.hpp"
#include "lapdom/scan.hpp"
#include "lapdom/threshold.hpp"

namespace lapdom::cli {

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits. Magnitudes below 1e-12 are rounding
// noise around an exact zero and print as 0.
double round12(double x);
// "%.12g" text of x.
std::string format12(double x);

struct NearEquality {
  std::vector<int> gmb;
  std::vector<int> brouwer;
  std::vector<int> std;
};
// k values within kNearEqualityMargin of each bound; saturated GMB and std
// entries are left out.
NearEquality near_equality(const DominanceReport& report);

Json analysis_json(const DominanceReport& report);
// Serialization, conjugate degrees, numeric spectrum, graph6 and energy.
Json threshold_json(const ThresholdGraph& t, const std::string& builder);
Json scan_json(const ScanSummary& summary, bool timing);

}  // namespace lapdom::cli
