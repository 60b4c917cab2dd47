#include "cuknot/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

namespace cuknot::cli {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

CsvLoad load_csv(const std::string& path, std::ostream& diagnostics) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open CSV file: " + path);

    std::string header;
    if (!std::getline(in, header)) throw parse_error("CSV file is empty: " + path);
    const auto columns = split_csv_line(header);
    auto find_col = [&](const std::string& name) {
        auto it = std::find(columns.begin(), columns.end(), name);
        if (it == columns.end())
            throw parse_error("CSV is missing required column `" + name + "`");
        return static_cast<std::size_t>(it - columns.begin());
    };
    const std::size_t name_col = find_col("name");
    const std::size_t pd_col = find_col("pd_notation");

    CsvLoad out;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() <= std::max(name_col, pd_col)) {
            diagnostics << "line " << lineno << ": too few fields, skipped\n";
            ++out.skipped;
            continue;
        }
        const std::string& name = fields[name_col];
        const std::string& pd = fields[pd_col];
        try {
            out.records.push_back(KnotRecord{name, pd, parse_pd(pd, name)});
        } catch (const std::exception& e) {
            diagnostics << "line " << lineno << " (" << name << "): " << e.what() << ", skipped\n";
            ++out.skipped;
        }
    }
    return out;
}

Report make_report(const std::string& name, const PlanarDiagram& d, int64_t p) {
    return Report{name, classify(d, p)};
}

std::string emit_json(const Report& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["p"] = r.body.p;
    j["determinant"] = r.body.determinant;
    j["colorable"] = r.body.colorable;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& e : r.body.classes) {
        nlohmann::ordered_json c;
        c["labels"] = e.canonical.labels;
        c["cu"] = e.cu;
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    j["cu_set"] = r.body.cu_values;
    j["cu_set_mirror"] = mirrored_cu_set(r.body.cu_values, r.body.p);
    auto g = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.body.goeritz.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < r.body.goeritz.cols(); ++k)
            row.push_back(r.body.goeritz.at(i, k));
        g.push_back(std::move(row));
    }
    j["goeritz"] = std::move(g);
    std::vector<int64_t> ks;
    for (const auto& e : r.body.classes) ks.push_back(e.representative_k);
    j["representative_k"] = ks;
    return j.dump();
}

namespace {

std::string format_set(const std::vector<int64_t>& v) {
    std::ostringstream s;
    s << '{';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << '}';
    return s.str();
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j);
        out << '\n';
    }
}

void print_report(std::ostream& out, const Report& r, bool with_note) {
    if (!r.name.empty()) out << "name: " << r.name << '\n';
    out << "p: " << r.body.p << '\n';
    out << "determinant: " << r.body.determinant << '\n';
    out << "colorable: " << (r.body.colorable ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < r.body.classes.size(); ++i) {
        const auto& e = r.body.classes[i];
        out << "class " << i + 1 << ": labels";
        for (int64_t l : e.canonical.labels) out << ' ' << l;
        out << "  cu " << e.cu << "  k " << e.representative_k << '\n';
    }
    out << "cu_set: " << format_set(r.body.cu_values) << '\n';
    out << "cu_set_mirror: " << format_set(mirrored_cu_set(r.body.cu_values, r.body.p)) << '\n';
    if (with_note)
        out << "note: cu separates surgery classes only up to the factor-2 ambiguity "
               "left open by the 2p upper bound\n";
}

struct Options {
    std::vector<std::string> pd;
    std::string file;
    std::string knot_name;
    int64_t p = 0;
    bool json = false;
    std::string hand = "left";
    int edge = 1;
    int sign = 1;
    std::size_t arc1 = 0;
    std::size_t arc2 = 0;
};

std::vector<std::pair<std::string, PlanarDiagram>> gather_inputs(const Options& opt, int needed,
                                                                 std::ostream& err) {
    std::vector<std::pair<std::string, PlanarDiagram>> inputs;
    for (const std::string& pd : opt.pd) inputs.emplace_back("", parse_pd(pd));
    if (!opt.file.empty()) {
        CsvLoad csv = load_csv(opt.file, err);
        if (!opt.knot_name.empty()) {
            bool found = false;
            for (const auto& rec : csv.records)
                if (rec.name == opt.knot_name) {
                    inputs.emplace_back(rec.name, rec.parsed);
                    found = true;
                    break;
                }
            if (!found) throw parse_error("knot `" + opt.knot_name + "` not found in " + opt.file);
        } else {
            for (const auto& rec : csv.records) inputs.emplace_back(rec.name, rec.parsed);
        }
    }
    if (inputs.empty()) throw parse_error("no input: give --pd or --file");
    if (needed > 0 && static_cast<int>(inputs.size()) != needed)
        throw parse_error("expected " + std::to_string(needed) + " input diagram(s), got " +
                          std::to_string(inputs.size()));
    return inputs;
}

int64_t require_p(const Options& opt) {
    if (opt.p == 0) throw parse_error("this command requires --p");
    if (!is_odd_prime(opt.p)) throw parse_error("--p must be an odd prime");
    return opt.p;
}

int dispatch(const std::string& cmd, const Options& opt, std::ostream& out, std::ostream& err) {
    if (cmd == "torus") {
        if (opt.p == 0) throw parse_error("torus requires --p");
        Handedness h = opt.hand == "right" ? Handedness::Right : Handedness::Left;
        out << serialize_pd(torus_knot(static_cast<int>(opt.p), h)) << '\n';
        return kExitOk;
    }

    if (cmd == "parse" || cmd == "mirror" || cmd == "r1") {
        auto inputs = gather_inputs(opt, 1, err);
        const PlanarDiagram& d = inputs[0].second;
        if (cmd == "parse")
            out << serialize_pd(d) << '\n';
        else if (cmd == "mirror")
            out << serialize_pd(mirror(d)) << '\n';
        else
            out << serialize_pd(r1_twist(d, opt.edge, opt.sign)) << '\n';
        return kExitOk;
    }

    if (cmd == "sum") {
        auto inputs = gather_inputs(opt, 2, err);
        out << serialize_pd(
                   connected_sum(inputs[0].second, opt.arc1, inputs[1].second, opt.arc2))
            << '\n';
        return kExitOk;
    }

    // reporting verbs; batch mode emits one block/object per row
    auto inputs = gather_inputs(opt, -1, err);
    bool first = true;
    for (const auto& [name, d] : inputs) {
        if (cmd == "det" && !opt.json) {
            if (inputs.size() > 1) out << name << ": ";
            out << knot_determinant(d) << '\n';
            continue;
        }
        if (cmd == "goeritz" && !opt.json) {
            if (inputs.size() > 1) out << name << ":\n";
            print_matrix(out, pre_goeritz(d, shade(d, ShadingVariant::Primary)).g);
            continue;
        }
        const int64_t p = require_p(opt);
        Report r = make_report(name, d, p);
        if (cmd == "cu" && !r.body.colorable) {
            err << (name.empty() ? "knot" : name) << " is not " << p << "-colorable\n";
            return kExitNotColorable;
        }
        if (opt.json) {
            out << emit_json(r) << '\n';
        } else if (cmd == "colorings") {
            if (!first) out << '\n';
            if (!name.empty()) out << "name: " << name << '\n';
            out << r.body.classes.size() << " coloring class(es) mod " << p << '\n';
            for (std::size_t i = 0; i < r.body.classes.size(); ++i) {
                out << "class " << i + 1 << ": labels";
                for (int64_t l : r.body.classes[i].canonical.labels) out << ' ' << l;
                out << '\n';
            }
        } else {
            if (!first) out << '\n';
            print_report(out, r, cmd == "classify");
        }
        first = false;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fox p-colorings and the colored untying invariant via the Goeritz matrix"};
    app.name("cuknot");
    Options opt;

    const std::vector<std::string> verbs = {"parse", "det",  "goeritz", "colorings", "cu",
                                            "classify", "sum", "mirror",  "torus",     "r1"};
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v);
        sub->add_option("--pd", opt.pd, "PD notation, e.g. X(1,4,2,5),...");
        sub->add_option("--file", opt.file, "CSV knot table with columns name, pd_notation");
        sub->add_option("--name", opt.knot_name, "row to select from --file");
        sub->add_option("--p", opt.p, "odd prime modulus (torus: number of half twists)");
        sub->add_flag("--json", opt.json, "emit the JSON report");
        if (v == "torus")
            sub->add_option("--hand", opt.hand, "left|right")
                ->check(CLI::IsMember({"left", "right"}));
        if (v == "r1") {
            sub->add_option("--edge", opt.edge, "edge to kink (default 1)");
            sub->add_option("--sign", opt.sign, "kink sign +1|-1")->check(CLI::IsMember({1, -1}));
        }
        if (v == "sum") {
            sub->add_option("--arc1", opt.arc1, "arc of the first summand (default 0)");
            sub->add_option("--arc2", opt.arc2, "arc of the second summand (default 0)");
        }
    }
    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("cuknot");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const not_colorable_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNotColorable;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

}  // namespace cuknot::cli
