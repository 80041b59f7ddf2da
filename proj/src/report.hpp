#ifndef ORDERZETA_REPORT_HPP
#define ORDERZETA_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "analytic.hpp"
#include "series.hpp"

namespace orderzeta {

using json = nlohmann::ordered_json;

// Machine-readable verification report; `pass` is the conjunction of the
// item flags.  Exact values are serialized as decimal or num/den strings.
struct match_report {
    std::string command;
    json params = json::object();
    std::vector<report_item> items;
    long elapsed_ms = 0;

    bool pass() const;
    json to_json() const;
    std::string to_csv() const;
};

report_item item_from_numeric(const numeric_check& c);

// Kloosterman table emission record.
struct table_entry {
    unsigned v = 0;
    unsigned r = 0;
    std::string value;  // decimal string, or empty when errored
    std::string error;  // diagnostic for inadmissible keys
};

struct table_report {
    json params = json::object();
    std::vector<table_entry> entries;
    long elapsed_ms = 0;

    json to_json() const;
    std::string to_csv() const;
};

}  // namespace orderzeta

#endif
