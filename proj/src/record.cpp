// Copyright 2026 The gaa Authors.
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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "gaa/errors.hpp"
#include "gaa/lab.hpp"

namespace gaa {

void ExperimentRecord::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) {
        throw DomainError("row has " + std::to_string(row.size()) + " values for " +
                          std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::size_t ExperimentRecord::column_index(const std::string &name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw DomainError("no column named '" + name + "'");
    }
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> ExperimentRecord::column(const std::string &name) const {
    const std::size_t c = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto &r : rows) {
        out.push_back(r[c]);
    }
    return out;
}

double ExperimentRecord::at(std::size_t row, const std::string &name) const {
    return rows.at(row).at(column_index(name));
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "NA";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 17);
    return {buf, res.ptr};
}

namespace {

nlohmann::ordered_json number(double v) {
    if (std::isnan(v)) {
        return nullptr;
    }
    // Integral values (counts, indices) print without a fraction.
    if (v == std::trunc(v) && std::abs(v) < 9007199254740992.0) {
        return static_cast<std::int64_t>(v);
    }
    return v;
}

nlohmann::ordered_json row_object(const ExperimentRecord &r, const std::vector<double> &row) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
        o[r.columns[c]] = number(row[c]);
    }
    return o;
}

} // namespace

std::string to_json(const ExperimentRecord &r, int indent) {
    nlohmann::ordered_json doc;
    doc["experiment"] = r.experiment;
    doc["params"] = r.params;
    nlohmann::ordered_json meta;
    meta["version"] = r.version;
    if (r.timestamp) {
        meta["timestamp"] = *r.timestamp;
    }
    doc["meta"] = meta;
    if (r.single_result && r.rows.size() == 1) {
        doc["result"] = row_object(r, r.rows.front());
    } else {
        auto series = nlohmann::ordered_json::array();
        for (const auto &row : r.rows) {
            series.push_back(row_object(r, row));
        }
        doc["series"] = std::move(series);
    }
    if (!r.summary.empty()) {
        doc["summary"] = r.summary;
    }
    return doc.dump(indent) + "\n";
}

std::string to_tsv(const ExperimentRecord &r) {
    std::string out;
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
        if (c) {
            out += '\t';
        }
        out += r.columns[c];
    }
    out += '\n';
    for (const auto &row : r.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out += '\t';
            }
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

} // namespace gaa
