#include "btls/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace btls {

namespace {

using nlohmann::json;

std::vector<std::string> scalar_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

std::vector<std::string> string_array(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw BadDimensions(std::string("missing or non-array field '") + key + "'");
    std::vector<std::string> out;
    for (const auto& item : doc[key]) {
        if (!item.is_string())
            throw BadScalar(std::string("non-string scalar in field '") + key + "'");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

std::string system_to_json(const ExactSystem& sys) {
    json doc;
    doc["n"] = sys.n;
    doc["a"] = scalar_strings(sys.a);
    doc["b"] = scalar_strings(sys.b);
    doc["c"] = scalar_strings(sys.c);
    doc["p"] = scalar_strings(sys.p);
    doc["q"] = scalar_strings(sys.q);
    doc["y"] = scalar_strings(sys.y);
    return doc.dump(2) + "\n";
}

ExactSystem system_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw BadScalar(std::string("invalid system file: ") + e.what());
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw BadDimensions("missing or non-integer field 'n'");
    RawSystem raw;
    raw.n = doc["n"].get<int>();
    raw.a = string_array(doc, "a");
    raw.b = string_array(doc, "b");
    raw.c = string_array(doc, "c");
    raw.p = string_array(doc, "p");
    raw.q = string_array(doc, "q");
    raw.y = string_array(doc, "y");
    return validate_system(raw);
}

ExactSystem read_system(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return system_from_json(buf.str());
}

void write_system(const ExactSystem& sys, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << system_to_json(sys);
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string report_to_json(const SolveReport& report) {
    json doc;
    doc["method"] = report.method;
    doc["mode"] = report.mode;
    doc["x"] = report.x;
    doc["determinant"] = report.determinant;
    doc["flops"] = report.flops;
    doc["substitutions"] = report.substitutions;
    doc["residual_inf"] = report.residual_inf;
    doc["wall_time_s"] = report.wall_time_s;
    return doc.dump(2) + "\n";
}

std::string report_to_table(const SolveReport& report) {
    std::ostringstream out;
    out << "method        " << report.method << "\n"
        << "mode          " << report.mode << "\n"
        << "determinant   " << report.determinant << "\n"
        << "flops         " << report.flops << "\n"
        << "substitutions " << report.substitutions << "\n"
        << "residual_inf  " << report.residual_inf << "\n"
        << "wall_time_s   " << format_double(report.wall_time_s) << "\n"
        << "x:\n";
    for (std::size_t i = 0; i < report.x.size(); ++i)
        out << "  x_" << i + 1 << " = " << report.x[i] << "\n";
    return out.str();
}

}  // namespace btls
