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

#ifndef NLASIM_CSV_HPP
#define NLASIM_CSV_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace nlasim {

// '#'-prefixed "key = value" lines, one header row, then numeric rows.
struct CsvTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    const std::string* meta_value(const std::string& key) const;
    std::size_t column(const std::string& name) const;
};

// 12 significant digits; inf/nan spelled "inf", "-inf", "nan".
std::string format_number(double v);
double parse_number(const std::string& text);

void write_csv(std::ostream& out, const CsvTable& table);
CsvTable read_csv(std::istream& in);

}  // namespace nlasim

#endif  // NLASIM_CSV_HPP
