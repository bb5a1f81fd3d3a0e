// Copyright 2026 The jaws Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jaws/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jaws/error.hpp"
#include "jaws/simulator.hpp"

namespace jaws {

namespace {

using nlohmann::json;

struct Ctx {
    const std::string &source;

    [[noreturn]] void fail(const std::string &field, const std::string &what) const {
        throw ValidationError(source + ": " + field + ": " + what);
    }

    std::size_t count(const json &j, const std::string &field, bool allow_zero) const {
        if (!j.is_number_integer() || j.get<long long>() < (allow_zero ? 0 : 1)) {
            fail(field, allow_zero ? "expected a non-negative integer" : "expected a positive integer");
        }
        return static_cast<std::size_t>(j.get<long long>());
    }

    double real(const json &j, const std::string &field) const {
        if (!j.is_number()) {
            fail(field, "expected a number");
        }
        return j.get<double>();
    }

    std::vector<double> array(const json &j, const std::string &field) const {
        std::vector<double> v;
        for (std::size_t k = 0; k < j.size(); ++k) {
            v.push_back(real(j[k], field + "[" + std::to_string(k) + "]"));
        }
        return v;
    }
};

std::vector<double> observable(const Ctx &ctx, const json &j, const std::string &field) {
    std::vector<double> v;
    if (j.is_array()) {
        v = ctx.array(j, field);
    } else if (j.is_object() && j.contains("pauli")) {
        const json &p = j["pauli"];
        std::vector<PauliTerm> terms;
        try {
            if (p.is_string()) {
                terms = parse_pauli_text(p.get<std::string>());
            } else if (p.is_array()) {
                for (std::size_t k = 0; k < p.size(); ++k) {
                    const std::string f = field + ".pauli[" + std::to_string(k) + "]";
                    if (!p[k].is_array() || p[k].size() != 2 || !p[k][1].is_string()) {
                        ctx.fail(f, "expected [coeff, \"pauli string\"]");
                    }
                    terms.push_back({ctx.real(p[k][0], f + "[0]"), p[k][1].get<std::string>()});
                }
            } else {
                ctx.fail(field + ".pauli", "expected text lines or an array of terms");
            }
            v = spectrum_from_pauli(terms);
        } catch (const ValidationError &e) {
            if (std::string(e.what()).rfind(ctx.source, 0) == 0) {
                throw;
            }
            ctx.fail(field + ".pauli", e.what());
        }
    } else {
        ctx.fail(field, "expected an array or {\"pauli\": ...}");
    }
    // Eigenvalue order carries no meaning; store sorted.
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<double> input(const Ctx &ctx, const json &j, const std::string &field, std::size_t dim) {
    if (j.is_array()) {
        return ctx.array(j, field);
    }
    if (j.is_object() && j.contains("pure")) {
        if (!j["pure"].is_boolean() || !j["pure"].get<bool>()) {
            ctx.fail(field + ".pure", "only \"pure\": true is supported");
        }
        const double t = j.contains("trace") ? ctx.real(j["trace"], field + ".trace") : 1.0;
        if (!(t > 0.0)) {
            ctx.fail(field + ".trace", "must be positive");
        }
        std::vector<double> v(dim, 0.0);
        v[0] = t;
        return v;
    }
    ctx.fail(field, "expected an array or {\"pure\": true, \"trace\": t}");
}

} // namespace

JawsModel parse_model(const std::string &text, const std::string &source) {
    const Ctx ctx{source};
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        // Map the byte offset to line and column.
        const std::size_t byte = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < byte; ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ValidationError(source + ": line " + std::to_string(line) + " column " +
                              std::to_string(col) + ": malformed JSON");
    }
    if (!doc.is_object()) {
        ctx.fail("<root>", "expected an object");
    }
    JawsModel m;
    for (const char *key : {"total_params", "components"}) {
        if (!doc.contains(key)) {
            ctx.fail(key, "missing");
        }
    }
    m.total_params = ctx.count(doc["total_params"], "total_params", false);
    if (doc.contains("normalization")) {
        m.normalization = ctx.real(doc["normalization"], "normalization");
    }
    if (doc.contains("fully_controllable")) {
        if (!doc["fully_controllable"].is_boolean()) {
            ctx.fail("fully_controllable", "expected a boolean");
        }
        m.fully_controllable = doc["fully_controllable"].get<bool>();
    }
    if (doc.contains("ambient_dim")) {
        m.ambient_dim = ctx.count(doc["ambient_dim"], "ambient_dim", false);
    }
    const json &comps = doc["components"];
    if (!comps.is_array()) {
        ctx.fail("components", "expected an array");
    }
    for (std::size_t a = 0; a < comps.size(); ++a) {
        const std::string base = "components[" + std::to_string(a) + "]";
        const json &cj = comps[a];
        if (!cj.is_object()) {
            ctx.fail(base, "expected an object");
        }
        for (const char *key : {"field", "dim", "observable_spectrum", "input_spectrum", "sector_params"}) {
            if (!cj.contains(key)) {
                ctx.fail(base + "." + key, "missing");
            }
        }
        SimpleComponent c;
        if (!cj["field"].is_string()) {
            ctx.fail(base + ".field", "expected \"R\", \"C\" or \"H\"");
        }
        try {
            c.field = field_from_letter(cj["field"].get<std::string>());
        } catch (const std::exception &) {
            ctx.fail(base + ".field", "expected \"R\", \"C\" or \"H\"");
        }
        c.dim = ctx.count(cj["dim"], base + ".dim", false);
        if (cj.contains("index")) {
            c.index = ctx.real(cj["index"], base + ".index");
        }
        c.sector_params = ctx.count(cj["sector_params"], base + ".sector_params", true);
        c.observable_spectrum = observable(ctx, cj["observable_spectrum"], base + ".observable_spectrum");
        c.input_spectrum = input(ctx, cj["input_spectrum"], base + ".input_spectrum", c.dim);
        try {
            c.validate();
        } catch (const ValidationError &e) {
            ctx.fail(base, e.what());
        }
        m.components.push_back(std::move(c));
    }
    try {
        m.validate();
    } catch (const ValidationError &e) {
        ctx.fail("<model>", e.what());
    }
    return m;
}

JawsModel load_model(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError(path + ": cannot open model file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str(), path);
}

std::string model_to_json(const JawsModel &model) {
    json doc;
    doc["total_params"] = model.total_params;
    doc["normalization"] = model.normalization;
    if (model.fully_controllable) {
        doc["fully_controllable"] = true;
    }
    if (model.ambient_dim > 0) {
        doc["ambient_dim"] = model.ambient_dim;
    }
    doc["components"] = json::array();
    for (const SimpleComponent &c : model.components) {
        json cj;
        cj["field"] = std::string(1, field_letter(c.field));
        cj["dim"] = c.dim;
        cj["index"] = c.index;
        cj["observable_spectrum"] = c.observable_spectrum;
        cj["input_spectrum"] = c.input_spectrum;
        cj["sector_params"] = c.sector_params;
        doc["components"].push_back(cj);
    }
    return doc.dump(2) + "\n";
}

} // namespace jaws
