// Copyright 2026 The STIRUP Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace stirup {

/// Number formatted with 12 significant digits and a '.' decimal separator.
std::string format_number(double value);

using CsvCell = std::variant<double, std::string>;

/// Writes a header row, then rows of the same width.
class CsvWriter {
  public:
    CsvWriter(std::ostream &os, std::vector<std::string> header);

    void row(std::initializer_list<double> values);
    void row(std::span<const double> values);
    void row(const std::vector<CsvCell> &cells);

    std::size_t columns() const { return header_.size(); }

  private:
    void check_width(std::size_t n) const;

    std::ostream &os_;
    std::vector<std::string> header_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string &name) const; ///< -1 when absent
    double number(std::size_t row, const std::string &name) const;
};

/// Parses plain comma-separated text (no quoting) and checks every row has the header's width.
CsvTable read_csv_table(std::istream &is);

} // namespace stirup
