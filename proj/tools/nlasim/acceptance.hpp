// Copyright 2026 The NLA Simulator Authors
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

#ifndef NLASIM_ACCEPTANCE_HPP
#define NLASIM_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace nlasim {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs acceptance criteria 1-10 in order.
std::vector<CriterionResult> run_acceptance();
std::string format_line(const CriterionResult& r);

}  // namespace nlasim

#endif  // NLASIM_ACCEPTANCE_HPP
