// Copyright 2026 The majent Authors
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

#include "majent/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace majent {

namespace {

using nlohmann::json;

Eigen::MatrixXd read_real_matrix(const json& rows, const char* field) {
    if (!rows.is_array() || rows.empty()) {
        throw FormatError(std::string("'") + field + "' must be a nonempty array of rows");
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto m = static_cast<Eigen::Index>(rows.front().size());
    Eigen::MatrixXd out(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m) {
            throw FormatError(std::string("'") + field + "' rows must be arrays of equal length");
        }
        for (Eigen::Index j = 0; j < m; ++j) {
            const auto& x = row[static_cast<std::size_t>(j)];
            if (!x.is_number()) throw FormatError(std::string("'") + field + "' entries must be numbers");
            out(i, j) = x.get<double>();
        }
    }
    return out;
}

ComplexMatrix read_complex(const json& obj, const char* re_field, const char* im_field) {
    if (!obj.contains(re_field)) throw FormatError(std::string("missing '") + re_field + "'");
    const Eigen::MatrixXd re = read_real_matrix(obj.at(re_field), re_field);
    Eigen::MatrixXd im = Eigen::MatrixXd::Zero(re.rows(), re.cols());
    if (obj.contains(im_field)) {
        im = read_real_matrix(obj.at(im_field), im_field);
        if (im.rows() != re.rows() || im.cols() != re.cols()) {
            throw FormatError(std::string("'") + re_field + "' and '" + im_field + "' differ in shape");
        }
    }
    ComplexMatrix out(re.rows(), re.cols());
    out.real() = re;
    out.imag() = im;
    return out;
}

json matrix_rows(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

DensityMatrix parse_state_json(const std::string& text) {
    const json doc = parse_text(text);
    if (!doc.is_object()) throw FormatError("state file must hold a JSON object");
    if (!doc.contains("dims") || !doc.at("dims").is_array()) throw FormatError("missing 'dims' array");
    Dims dims;
    for (const auto& d : doc.at("dims")) {
        if (!d.is_number_integer()) throw FormatError("'dims' entries must be integers");
        dims.push_back(d.get<int>());
    }
    ComplexMatrix m = read_complex(doc, "matrix_re", "matrix_im");
    try {
        return DensityMatrix(std::move(m), std::move(dims));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid state: ") + e.what());
    }
}

DensityMatrix load_state(const std::filesystem::path& path) { return parse_state_json(read_file(path)); }

std::string state_to_json(const DensityMatrix& rho) {
    json doc;
    doc["dims"] = rho.dims();
    doc["matrix_re"] = matrix_rows(rho.matrix().real());
    doc["matrix_im"] = matrix_rows(rho.matrix().imag());
    return doc.dump(2) + "\n";
}

void save_state(const DensityMatrix& rho, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << state_to_json(rho);
}

Povm parse_povm_json(const std::string& text) {
    const json doc = parse_text(text);
    if (!doc.is_object()) throw FormatError("measurement file must hold a JSON object");
    if (!doc.contains("elements") || !doc.at("elements").is_array()) {
        throw FormatError("missing 'elements' array");
    }
    std::vector<ComplexMatrix> elements;
    for (const auto& e : doc.at("elements")) {
        if (!e.is_object()) throw FormatError("each element must be an object with 're'/'im'");
        elements.push_back(read_complex(e, "re", "im"));
    }
    const std::string label = doc.value("label", std::string("file"));
    try {
        return Povm(label, std::move(elements));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid measurement: ") + e.what());
    }
}

Povm load_povm(const std::filesystem::path& path) { return parse_povm_json(read_file(path)); }

std::string povm_to_json(const Povm& m) {
    json doc;
    doc["label"] = m.label();
    doc["elements"] = json::array();
    for (const auto& e : m.elements()) {
        doc["elements"].push_back({{"re", matrix_rows(e.real())}, {"im", matrix_rows(e.imag())}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace majent
