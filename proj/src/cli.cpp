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

#include "lefschetz/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "lefschetz/json.hpp"
#include "lefschetz/measures.hpp"
#include "lefschetz/orbit.hpp"
#include "lefschetz/parse.hpp"
#include "lefschetz/sod.hpp"
#include "lefschetz/varieties.hpp"

namespace lefschetz::cli {

namespace {

struct Options {
    std::string verb;
    std::string expr;
    bool json = false;
    std::optional<std::int64_t> dim;
    std::string collection;
};

struct Rendered {
    int status = kOk;
    std::string text;
    Json json;
};

ExprPtr read_expression(const std::string& arg, std::istream& in) {
    std::string text = arg;
    if (arg == "-") text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument("bad-json", std::string("expression JSON: ") + e.what());
        }
        ExprPtr e = variety_expr_from_json(j);
        validate(*e);
        return e;
    }
    return parse_expr(text);
}

TateMotive require_tate(const VarietyExpr& e) {
    GeneralizedMotive m = motive_of(e);
    if (!m.is_tate()) {
        throw DomainFailure("opaque-motive", "motive " + m.to_string() + " has non-Tate summands");
    }
    return m.tate;
}

Json header(const Options& o, const VarietyExpr& e) { return Json{{"command", o.verb}, {"expr", render(e)}}; }

Rendered do_motive(const Options& o, const VarietyExpr& e) {
    const GeneralizedMotive m = motive_of(e);
    Json j = header(o, e);
    j["dimension"] = dimension_of(e);
    j["motive"] = to_json(m);
    j["text"] = m.to_string();
    return {kOk, m.to_string() + "\n", j};
}

Rendered do_poincare(const Options& o, const VarietyExpr& e) {
    const PoincarePoly p = poincare(require_tate(e));
    Json j = header(o, e);
    j["betti"] = to_json(p);
    j["text"] = p.to_string();
    return {kOk, p.to_string() + "\n", j};
}

Rendered do_hodge(const Options& o, const VarietyExpr& e) {
    const HodgeDelignePoly hd = chi_hd(k0_class(e));
    const auto numbers = hodge_numbers(require_tate(e));
    const bool tate = hodge_tate(hd);
    std::ostringstream os;
    os << hd.to_string() << "\n";
    os << "hodge-tate: " << (tate ? "yes" : "no") << "\n";
    Json h = Json::object();
    for (const auto& [pq, n] : numbers) {
        os << "h^" << pq.first << "," << pq.second << " = " << n << "\n";
        h[std::to_string(pq.first) + "," + std::to_string(pq.second)] = n;
    }
    Json j = header(o, e);
    j["chi_HD"] = to_json(hd);
    j["hodge_tate"] = tate;
    j["hodge_numbers"] = Json{{"terms", h}};
    j["text"] = hd.to_string();
    return {kOk, os.str(), j};
}

Rendered do_k0(const Options& o, const VarietyExpr& e) {
    const K0Class c = k0_class(e);
    Json j = header(o, e);
    j["class"] = to_json(c);
    j["text"] = c.to_string();
    return {kOk, c.to_string() + "\n", j};
}

Rendered do_check_fec(const Options& o, const VarietyExpr& e) {
    const GeneralizedMotive m = motive_of(e);
    std::optional<Multiplicity> length;
    try {
        const Collection c = exceptional_collection_of(e);
        if (c.all_exceptional()) length = c.length();
    } catch (const DomainFailure&) {
        // No known collection: only odd vanishing can be checked.
    } catch (const InvalidArgument& ex) {
        if (ex.code() != "too-large") throw;
    }
    const FecReport r = fec_obstruction(betti_lower_bound(m), length);
    std::ostringstream os;
    os << to_string(r.verdict);
    if (r.offending_degree) os << " degree=" << *r.offending_degree;
    os << " minLength=" << r.min_length;
    if (length) os << " length=" << *length;
    os << "\n";
    Json j = header(o, e);
    j.update(to_json(r));
    j["length"] = length ? Json(*length) : Json(nullptr);
    return {r.verdict == FecVerdict::Ok ? kOk : kDomainFailure, os.str(), j};
}

Rendered do_sod_solve(const Options& o, const VarietyExpr& e) {
    const TateMotive total = require_tate(e);
    std::optional<Collection> input;
    if (!o.collection.empty()) {
        std::ifstream f(o.collection);
        if (!f) throw InvalidArgument("io-error", "cannot open collection file '" + o.collection + "'");
        Json j;
        try {
            j = Json::parse(f);
        } catch (const nlohmann::json::exception& ex) {
            throw InvalidArgument("bad-json", "collection file: " + std::string(ex.what()));
        }
        input = collection_from_json(j);
    } else {
        input = exceptional_collection_of(e);
    }
    const Collection solved = solve_nc_ranks(*input, total);
    std::ostringstream os;
    Multiplicity sum = 0;
    for (const auto& p : solved.pieces()) {
        os << p.label << " [" << (p.kind == PieceKind::Exceptional ? "exceptional" : "opaque") << "] n="
           << *p.nc_rank << "\n";
        sum += *p.nc_rank;
    }
    os << "total: " << sum << "\n";
    Json j = header(o, e);
    j["totalRank"] = total.rank();
    j["collection"] = to_json(solved);
    j["sum"] = sum;
    return {kOk, os.str(), j};
}

Rendered do_orbit_demo(const Options& o, const VarietyExpr& e) {
    const TateMotive m = require_tate(e);
    const std::int64_t dim = o.dim ? *o.dim : dimension_of(e);
    if (dim < 0) throw InvalidArgument("bad-dimension", "--dim must be non-negative");
    const auto [f, g] = block_isomorphism(m, TateMotive::lefschetz_power(0, m.rank()));
    const auto exponents = decompose_via_orbit(m, f, g, dim);
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? ", " : "") << exponents[i];
    os << "}\n";
    Json j = header(o, e);
    j["dim"] = dim;
    j["exponents"] = exponents;
    return {kOk, os.str(), j};
}

std::string diagnostic(bool json, const std::string& code, const std::string& message) {
    if (json) return Json{{"error", {{"code", code}, {"message", message}}}}.dump() + "\n";
    return "error[" + code + "]: " + message + "\n";
}

}  // namespace

Outcome run(const std::vector<std::string>& args, std::istream& in) {
    Options o;
    CLI::App app{"Chow motives of varieties with full exceptional collections", "lefschetz"};
    app.require_subcommand(1, 1);

    struct Verb {
        const char* name;
        const char* help;
    };
    const Verb verbs[] = {
        {"motive", "print the Chow motive as a sum of Lefschetz powers"},
        {"poincare", "print the Poincare polynomial of the Betti realization"},
        {"hodge", "print the Hodge-Deligne polynomial and Hodge numbers"},
        {"k0", "print the class in the Grothendieck ring of varieties"},
        {"check-fec", "test the cohomological obstructions to a full exceptional collection"},
        {"sod-solve", "fill in the noncommutative ranks of a semi-orthogonal decomposition"},
        {"orbit-demo", "recover the motive by lifting an orbit-category isomorphism"},
    };
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v.name, v.help);
        sub->add_option("expr", o.expr, "variety expression, JSON AST, or - for stdin")->required();
        sub->add_flag("--json", o.json, "machine-readable output");
        if (std::string(v.name) == "orbit-demo") {
            sub->add_option("--dim", o.dim, "dimension bound for grade supports (default: dimension of expr)");
        }
        if (std::string(v.name) == "sod-solve") {
            sub->add_option("--collection", o.collection, "collection JSON file (default: catalog collection)");
        }
        sub->callback([&o, name = std::string(v.name)] { o.verb = name; });
    }

    Outcome result;
    std::ostringstream out;
    std::ostringstream err;
    std::vector<std::string> argv_store{"lefschetz"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.status = code == 0 ? kOk : kInputError;
        return result;
    }

    try {
        const ExprPtr e = read_expression(o.expr, in);
        Rendered r;
        if (o.verb == "motive") {
            r = do_motive(o, *e);
        } else if (o.verb == "poincare") {
            r = do_poincare(o, *e);
        } else if (o.verb == "hodge") {
            r = do_hodge(o, *e);
        } else if (o.verb == "k0") {
            r = do_k0(o, *e);
        } else if (o.verb == "check-fec") {
            r = do_check_fec(o, *e);
        } else if (o.verb == "sod-solve") {
            r = do_sod_solve(o, *e);
        } else {
            r = do_orbit_demo(o, *e);
        }
        result.status = r.status;
        result.out = o.json ? r.json.dump(2) + "\n" : r.text;
    } catch (const DomainFailure& e) {
        result.status = kDomainFailure;
        result.err = diagnostic(o.json, e.code(), e.what());
    } catch (const Error& e) {
        result.status = kInputError;
        result.err = diagnostic(o.json, e.code(), e.what());
    }
    return result;
}

}  // namespace lefschetz::cli
