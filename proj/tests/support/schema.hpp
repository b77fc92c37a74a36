// Copyright 2026 The lefschetz Authors
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

// Checks a document against the subset of draft-07 JSON Schema used in
// schemas/: type, const, enum, minimum, properties, required,
// additionalProperties, propertyNames.pattern, items, oneOf and local $ref.

#pragma once

#include <regex>
#include <string>

#include <json.hpp>

namespace schema {

using nlohmann::json;

class Validator {
public:
    explicit Validator(json root) : root_(std::move(root)) {}

    /// Empty string when valid, otherwise the first problem found.
    std::string check(const json& doc) const { return check(root_, doc, "$"); }

private:
    const json& resolve(const std::string& ref) const {
        // only "#/definitions/<name>"
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
        return root_.at("definitions").at(ref.substr(prefix.size()));
    }

    static bool has_type(const json& doc, const std::string& t) {
        if (t == "object") return doc.is_object();
        if (t == "array") return doc.is_array();
        if (t == "string") return doc.is_string();
        if (t == "integer") return doc.is_number_integer();
        if (t == "number") return doc.is_number();
        if (t == "boolean") return doc.is_boolean();
        if (t == "null") return doc.is_null();
        throw std::runtime_error("unsupported type " + t);
    }

    std::string check(const json& s, const json& doc, const std::string& at) const {
        if (s.contains("$ref")) return check(resolve(s["$ref"].get<std::string>()), doc, at);
        if (s.contains("oneOf")) {
            int matches = 0;
            for (const auto& alt : s["oneOf"]) matches += check(alt, doc, at).empty() ? 1 : 0;
            if (matches != 1) return at + ": matches " + std::to_string(matches) + " oneOf alternatives";
        }
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array()) {
                for (const auto& t : s["type"]) ok = ok || has_type(doc, t.get<std::string>());
            } else {
                ok = has_type(doc, s["type"].get<std::string>());
            }
            if (!ok) return at + ": wrong type";
        }
        if (s.contains("const") && doc != s["const"]) return at + ": expected " + s["const"].dump();
        if (s.contains("enum")) {
            bool found = false;
            for (const auto& v : s["enum"]) found = found || v == doc;
            if (!found) return at + ": not in enum";
        }
        if (s.contains("minimum") && doc.is_number() && doc.get<double>() < s["minimum"].get<double>()) {
            return at + ": below minimum";
        }
        if (doc.is_object()) {
            for (const auto& r : s.value("required", json::array())) {
                if (!doc.contains(r.get<std::string>())) return at + ": missing " + r.get<std::string>();
            }
            const json props = s.value("properties", json::object());
            for (const auto& [k, v] : doc.items()) {
                if (s.contains("propertyNames")) {
                    const std::regex re(s["propertyNames"]["pattern"].get<std::string>());
                    if (!std::regex_search(k, re)) return at + ": bad key '" + k + "'";
                }
                if (props.contains(k)) {
                    if (auto e = check(props[k], v, at + "." + k); !e.empty()) return e;
                } else if (s.contains("additionalProperties")) {
                    const json& ap = s["additionalProperties"];
                    if (ap.is_boolean()) {
                        if (!ap.get<bool>()) return at + ": unexpected key '" + k + "'";
                    } else if (auto e = check(ap, v, at + "." + k); !e.empty()) {
                        return e;
                    }
                }
            }
        }
        if (doc.is_array() && s.contains("items")) {
            for (std::size_t i = 0; i < doc.size(); ++i) {
                if (auto e = check(s["items"], doc[i], at + "[" + std::to_string(i) + "]"); !e.empty()) return e;
            }
        }
        return "";
    }

    json root_;
};

}  // namespace schema
