// Copyright 2026 The qcoin Authors
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

#include "qcoin/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcoin::io {

namespace {

std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError(Violation::parse, "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::filesystem::path &path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::parse_error &e) {
        throw ValidationError(Violation::parse, path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

ComplexMatrix matrix_from_json(const json &re, const json *im, Eigen::Index dim, const std::string &what) {
    if (!re.is_array() || static_cast<Eigen::Index>(re.size()) != dim) {
        throw ValidationError(Violation::dimension, what + " must have " + std::to_string(dim) + " rows");
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const json &row = re[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            throw ValidationError(Violation::dimension, what + " row " + std::to_string(r) + " has the wrong length");
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            double imag = 0.0;
            if (im) {
                const json &irow = (*im)[static_cast<std::size_t>(r)];
                if (!irow.is_array() || static_cast<Eigen::Index>(irow.size()) != dim) {
                    throw ValidationError(Violation::dimension,
                                          what + " imaginary row " + std::to_string(r) + " has the wrong length");
                }
                imag = irow[static_cast<std::size_t>(c)].get<double>();
            }
            m(r, c) = cplx(row[static_cast<std::size_t>(c)].get<double>(), imag);
        }
    }
    return m;
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) {
            field.pop_back();
        }
        std::size_t start = field.find_first_not_of(' ');
        fields.push_back(start == std::string::npos ? std::string() : field.substr(start));
    }
    return fields;
}

/// Rows of a CSV with the given header; blank lines are skipped.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path &path,
                                               const std::vector<std::string> &header) {
    std::istringstream in(read_text(path));
    std::string line;
    bool have_header = false;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \r\t") == std::string::npos) {
            continue;
        }
        auto fields = split_csv_line(line);
        if (!have_header) {
            if (fields != header) {
                std::string expected;
                for (const auto &h : header) {
                    expected += (expected.empty() ? "" : ",") + h;
                }
                throw ValidationError(Violation::parse, path.string() + ": expected header \"" + expected + "\"");
            }
            have_header = true;
            continue;
        }
        if (fields.size() != header.size()) {
            throw ValidationError(Violation::parse, path.string() + ": malformed row \"" + line + "\"");
        }
        rows.push_back(std::move(fields));
    }
    if (!have_header) {
        throw ValidationError(Violation::parse, path.string() + " is empty");
    }
    return rows;
}

template <typename T>
T parse_field(const std::string &s, const std::filesystem::path &path) {
    std::istringstream in(s);
    T v{};
    in >> v;
    if (in.fail() || !in.eof()) {
        throw ValidationError(Violation::parse, path.string() + ": cannot parse \"" + s + "\"");
    }
    return v;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double round12(double v) {
    return std::isfinite(v) ? std::stod(format_number(v)) : v;
}

Povm read_povm_json(const std::filesystem::path &path, double tol) {
    json doc = read_json(path);
    std::vector<ComplexMatrix> elements;
    std::vector<std::string> labels;
    try {
        const auto dim = doc.at("dim").get<Eigen::Index>();
        if (dim < 1) {
            throw ValidationError(Violation::dimension, "dim must be positive");
        }
        const json &list = doc.at("elements");
        if (!list.is_array() || list.empty()) {
            throw ValidationError(Violation::dimension, "elements must be a non-empty array");
        }
        for (const json &el : list) {
            if (!el.is_array() || static_cast<Eigen::Index>(el.size()) != dim * dim) {
                throw ValidationError(Violation::dimension,
                                      "each element needs dim*dim = " + std::to_string(dim * dim) + " entries");
            }
            ComplexMatrix m(dim, dim);
            for (Eigen::Index k = 0; k < dim * dim; ++k) {
                const json &z = el[static_cast<std::size_t>(k)];
                m(k / dim, k % dim) = z.is_array() ? cplx(z.at(0).get<double>(), z.at(1).get<double>())
                                                   : cplx(z.get<double>(), 0.0);
            }
            elements.push_back(std::move(m));
        }
        if (doc.contains("labels")) {
            labels = doc["labels"].get<std::vector<std::string>>();
        }
    } catch (const json::exception &e) {
        throw ValidationError(Violation::parse, path.string() + ": " + e.what());
    }
    return Povm::from_elements(std::move(elements), tol, std::move(labels));
}

void write_povm_json(const std::filesystem::path &path, const Povm &povm) {
    json doc;
    doc["dim"] = povm.dim();
    json list = json::array();
    for (const auto &e : povm.elements()) {
        json entries = json::array();
        for (Eigen::Index k = 0; k < e.size(); ++k) {
            const cplx z = e(k / e.cols(), k % e.cols());
            entries.push_back({round12(z.real()), round12(z.imag())});
        }
        list.push_back(std::move(entries));
    }
    doc["elements"] = std::move(list);
    if (!povm.labels().empty()) {
        doc["labels"] = povm.labels();
    }
    write_text(path, doc.dump(2) + "\n");
}

CoinState read_coin_csv(const std::filesystem::path &path, double tol) {
    auto rows = read_csv(path, {"i", "j", "p"});
    if (rows.empty()) {
        throw ValidationError(Violation::dimension, path.string() + " has no joint outcomes");
    }
    int d_a = 0;
    int d_b = 0;
    std::vector<std::tuple<int, int, double>> cells;
    for (const auto &r : rows) {
        int i = parse_field<int>(r[0], path);
        int j = parse_field<int>(r[1], path);
        if (i < 0 || j < 0) {
            throw ValidationError(Violation::dimension, "negative outcome index in " + path.string());
        }
        cells.emplace_back(i, j, parse_field<double>(r[2], path));
        d_a = std::max(d_a, i + 1);
        d_b = std::max(d_b, j + 1);
    }
    if (static_cast<int>(cells.size()) != d_a * d_b) {
        throw ValidationError(Violation::dimension, path.string() + " must list every joint outcome exactly once");
    }
    RealMatrix joint = RealMatrix::Constant(d_a, d_b, std::nan(""));
    for (auto [i, j, p] : cells) {
        if (!std::isnan(joint(i, j))) {
            throw ValidationError(Violation::dimension, "duplicate joint outcome in " + path.string());
        }
        joint(i, j) = p;
    }
    return CoinState::from_matrix(joint, tol);
}

void write_coin_csv(const std::filesystem::path &path, const CoinState &coin) {
    std::string out = "i,j,p\n";
    for (int i = 0; i < coin.d_a(); ++i) {
        for (int j = 0; j < coin.d_b(); ++j) {
            out += std::to_string(i) + "," + std::to_string(j) + "," + format_number(coin(i, j)) + "\n";
        }
    }
    write_text(path, out);
}

ComplexMatrix parse_density_json(const std::filesystem::path &path) {
    json doc = read_json(path);
    try {
        const auto dim = doc.at("dim").get<Eigen::Index>();
        if (dim < 1) {
            throw ValidationError(Violation::dimension, "dim must be positive");
        }
        const json *im = doc.contains("im") ? &doc["im"] : nullptr;
        return matrix_from_json(doc.at("re"), im, dim, "density matrix");
    } catch (const json::exception &e) {
        throw ValidationError(Violation::parse, path.string() + ": " + e.what());
    }
}

DensityOperator read_density_json(const std::filesystem::path &path, double tol) {
    return DensityOperator::from_matrix(parse_density_json(path), tol);
}

void write_density_json(const std::filesystem::path &path, const ComplexMatrix &m) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json rr = json::array();
        json ir = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(round12(m(r, c).real()));
            ir.push_back(round12(m(r, c).imag()));
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    json doc{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
    write_text(path, doc.dump(2) + "\n");
}

std::filesystem::path metadata_path(const std::filesystem::path &counts_csv) {
    std::filesystem::path p = counts_csv;
    return p.replace_extension(".meta.json");
}

CountsTable read_counts_csv(const std::filesystem::path &path) {
    auto rows = read_csv(path, {"i", "j", "counts"});
    int n = 0;
    for (const auto &r : rows) {
        n = std::max({n, parse_field<int>(r[0], path) + 1, parse_field<int>(r[1], path) + 1});
    }
    if (n == 0 || static_cast<int>(rows.size()) != n * n) {
        throw ValidationError(Violation::dimension, path.string() + " must hold an n x n table of counts");
    }
    CountsTable table;
    table.n = n;
    table.counts.assign(static_cast<std::size_t>(n * n), -1);
    for (const auto &r : rows) {
        int i = parse_field<int>(r[0], path);
        int j = parse_field<int>(r[1], path);
        auto c = parse_field<std::int64_t>(r[2], path);
        if (i < 0 || j < 0) {
            throw ValidationError(Violation::dimension, "negative outcome index in " + path.string());
        }
        if (c < 0) {
            throw ValidationError(Violation::negativity, "negative count at (" + r[0] + "," + r[1] + ")");
        }
        auto &slot = table.counts[static_cast<std::size_t>(i * n + j)];
        if (slot >= 0) {
            throw ValidationError(Violation::dimension, "duplicate cell in " + path.string());
        }
        slot = c;
    }
    auto meta = metadata_path(path);
    if (std::filesystem::exists(meta)) {
        json doc = read_json(meta);
        try {
            table.plan.p = doc.at("p").get<double>();
            table.plan.total_time = doc.at("total_time_s").get<double>();
            table.plan.pair_rate = doc.at("pair_rate_hz").get<double>();
            table.plan.seed = doc.at("seed").get<std::uint64_t>();
        } catch (const json::exception &e) {
            throw ValidationError(Violation::parse, meta.string() + ": " + e.what());
        }
    }
    return table;
}

void write_counts_csv(const std::filesystem::path &path, const CountsTable &table, const json &manifest) {
    std::string out = "i,j,counts\n";
    for (int i = 0; i < table.n; ++i) {
        for (int j = 0; j < table.n; ++j) {
            out += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(table.at(i, j)) + "\n";
        }
    }
    write_text(path, out);
    json meta = to_json(table.plan);
    meta["manifest"] = manifest;
    write_text(metadata_path(path), meta.dump(2) + "\n");
}

json to_json(const SearchResult &result) {
    json values = json::array();
    for (double v : result.per_restart_values) {
        values.push_back(round12(v));
    }
    json argument = json::array();
    for (double v : result.argument) {
        argument.push_back(round12(v));
    }
    return {{"value", round12(result.value)},
            {"argument", std::move(argument)},
            {"per_restart_values", std::move(values)},
            {"converged", result.converged},
            {"seed", result.seed}};
}

json to_json(const PayoffEstimate &estimate) {
    return {{"payoff", round12(estimate.payoff)},
            {"ci_low", round12(estimate.ci_low)},
            {"ci_high", round12(estimate.ci_high)},
            {"interval", "parametric Poisson bootstrap, 16th-84th percentile"},
            {"bootstrap_samples", estimate.bootstrap_samples},
            {"exceeds_classical", estimate.exceeds_classical}};
}

json to_json(const AcquisitionPlan &plan) {
    return {{"p", round12(plan.p)},
            {"total_time_s", round12(plan.total_time)},
            {"pair_rate_hz", round12(plan.pair_rate)},
            {"seed", plan.seed}};
}

}  // namespace qcoin::io
