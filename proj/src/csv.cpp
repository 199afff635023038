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


#include "stirup/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "stirup/errors.hpp"

namespace stirup {

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

CsvWriter::CsvWriter(std::ostream &os, std::vector<std::string> header)
    : os_(os), header_(std::move(header)) {
    for (std::size_t i = 0; i < header_.size(); ++i) {
        os_ << (i ? "," : "") << header_[i];
    }
    os_ << '\n';
}

void CsvWriter::check_width(std::size_t n) const {
    if (n != header_.size()) {
        throw DimensionError("CSV row has " + std::to_string(n) + " cells, header has " +
                             std::to_string(header_.size()));
    }
}

void CsvWriter::row(std::initializer_list<double> values) {
    row(std::span<const double>(values.begin(), values.size()));
}

void CsvWriter::row(std::span<const double> values) {
    check_width(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        os_ << (i ? "," : "") << format_number(values[i]);
    }
    os_ << '\n';
}

void CsvWriter::row(const std::vector<CsvCell> &cells) {
    check_width(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        os_ << (i ? "," : "");
        if (const double *v = std::get_if<double>(&cells[i])) {
            os_ << format_number(*v);
        } else {
            os_ << std::get<std::string>(cells[i]);
        }
    }
    os_ << '\n';
}

int CsvTable::column(const std::string &name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

double CsvTable::number(std::size_t row, const std::string &name) const {
    const int c = column(name);
    if (c < 0) {
        throw DomainError("CSV has no column '" + name + "'");
    }
    return std::stod(rows.at(row).at(c));
}

namespace {
std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}
} // namespace

CsvTable read_csv_table(std::istream &is) {
    CsvTable table;
    std::string line;
    if (!std::getline(is, line)) {
        throw DomainError("CSV input is empty");
    }
    table.header = split(line);
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        auto cells = split(line);
        if (cells.size() != table.header.size()) {
            throw DomainError("CSV line " + std::to_string(line_no) + " has " +
                              std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(cells));
    }
    return table;
}

} // namespace stirup
