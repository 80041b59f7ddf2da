#include "report.hpp"

#include <sstream>

namespace orderzeta {

bool match_report::pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

json match_report::to_json() const {
    json j;
    j["command"] = command;
    j["params"] = params;
    json items_j = json::array();
    for (const auto& it : items) {
        json e;
        e["label"] = it.label;
        e["expected"] = it.expected;
        e["computed"] = it.computed;
        e["pass"] = it.pass;
        items_j.push_back(std::move(e));
    }
    j["items"] = std::move(items_j);
    j["pass"] = pass();
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string match_report::to_csv() const {
    std::ostringstream os;
    os << "label,expected,computed,pass\n";
    for (const auto& it : items)
        os << csv_escape(it.label) << "," << csv_escape(it.expected) << ","
           << csv_escape(it.computed) << "," << (it.pass ? "true" : "false")
           << "\n";
    return os.str();
}

report_item item_from_numeric(const numeric_check& c) {
    std::ostringstream e, g;
    e.precision(15);
    g.precision(15);
    e << c.expected;
    g << c.computed;
    return {c.label, e.str(), g.str(), c.pass};
}

json table_report::to_json() const {
    json j;
    j["command"] = "ktab";
    j["params"] = params;
    json entries_j = json::array();
    for (const auto& e : entries) {
        json row;
        row["v"] = e.v;
        row["r"] = e.r;
        if (e.error.empty())
            row["K"] = e.value;
        else
            row["error"] = e.error;
        entries_j.push_back(std::move(row));
    }
    j["entries"] = std::move(entries_j);
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string table_report::to_csv() const {
    std::ostringstream os;
    os << "v,r,K,error\n";
    for (const auto& e : entries)
        os << e.v << "," << e.r << "," << e.value << ","
           << csv_escape(e.error) << "\n";
    return os.str();
}

}  // namespace orderzeta
