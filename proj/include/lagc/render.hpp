#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "lagc/compose.hpp"
#include "lagc/printer.hpp"

namespace lagc {

enum class OutputFormat { text, json };

inline std::vector<Trace> sorted_traces(const TraceSet& ts) {
    std::vector<Trace> v(ts.begin(), ts.end());
    std::sort(v.begin(), v.end(), front_to_back_less);
    return v;
}

inline nlohmann::json to_json(const TraceAtom& a) {
    if (a.is_state()) {
        auto s = nlohmann::json::object();
        for (const auto& [k, v] : a.state()) s[k.name] = pretty(v);
        return {{"state", s}};
    }
    auto args = nlohmann::json::array();
    for (const auto& e : a.event().args) args.push_back(pretty(e));
    return {{"event", {{"kind", to_string(a.event().ev)}, {"args", args}}}};
}

inline std::string render_traces(const TraceSet& ts, OutputFormat fmt) {
    const auto traces = sorted_traces(ts);
    if (fmt == OutputFormat::json) {
        auto arr = nlohmann::json::array();
        for (const auto& t : traces) {
            auto atoms = nlohmann::json::array();
            for (const auto& a : t.atoms()) atoms.push_back(to_json(a));
            arr.push_back(std::move(atoms));
        }
        return nlohmann::json{{"traces", arr}}.dump(2) + "\n";
    }
    std::string r = std::to_string(traces.size()) + (traces.size() == 1 ? " trace\n" : " traces\n");
    for (std::size_t i = 0; i < traces.size(); ++i) {
        r += "\ntrace " + std::to_string(i + 1) + ":\n";
        bool first = true;
        for (const auto& a : traces[i].atoms()) {
            r += (first ? "     " : "  ~> ") + pretty(a) + "\n";
            first = false;
        }
    }
    return r;
}

}  // namespace lagc
