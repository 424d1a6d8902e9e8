#include "ydn/resultdoc.hpp"

#include <sstream>

namespace ydn {

namespace {

bool scalar_array(const ojson& a) {
    for (const auto& v : a)
        if (v.is_structured()) return false;
    return true;
}

std::string scalar_str(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

// Numeric lists go space-joined on one line; string lists one per line
// (adjacency and open-edge listings read as documented records that way).
void render_value(std::ostringstream& os, const std::string& key, const ojson& v, int indent) {
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        os << pad << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it) render_value(os, it.key(), it.value(), indent + 2);
        return;
    }
    if (v.is_array() && scalar_array(v)) {
        bool strings = false;
        for (const auto& e : v) strings = strings || e.is_string();
        if (strings) {
            os << pad << key << ":\n";
            for (const auto& e : v) os << pad << "  " << scalar_str(e) << "\n";
        } else {
            os << pad << key << ":";
            for (const auto& e : v) os << " " << scalar_str(e);
            os << "\n";
        }
        return;
    }
    if (v.is_array()) {
        os << pad << key << ":\n";
        for (const auto& e : v) {
            os << pad << "  -\n";
            for (auto it = e.begin(); it != e.end(); ++it)
                render_value(os, it.key(), it.value(), indent + 4);
        }
        return;
    }
    os << pad << key << ": " << scalar_str(v) << "\n";
}

}  // namespace

ResultDocument::ResultDocument(const std::string& command, const std::string& input_hash,
                               int cutoff) {
    doc_["format"] = "ydnichols-result-v1";
    doc_["command"] = command;
    doc_["input_hash"] = input_hash;
    doc_["cutoff"] = cutoff;
    doc_["parameters"] = ojson::object();
    doc_["results"] = ojson::object();
    doc_["reports"] = ojson::array();
}

void ResultDocument::set_parameter(const std::string& key, const ojson& value) {
    doc_["parameters"][key] = value;
}

void ResultDocument::set_result(const std::string& key, const ojson& value) {
    doc_["results"][key] = value;
}

void ResultDocument::add_report(const std::string& name, const CheckReport& rep) {
    ojson r;
    r["name"] = name;
    r["all_ok"] = rep.all_ok();
    std::string first;
    ojson items = ojson::array();
    for (const auto& it : rep.items) {
        ojson o;
        o["name"] = it.first;
        o["ok"] = it.second;
        items.push_back(std::move(o));
        if (!it.second && first.empty()) first = it.first;
    }
    r["first_failure"] = first;
    r["items"] = std::move(items);
    doc_["reports"].push_back(std::move(r));
    if (!rep.all_ok()) failed_ = true;
}

ojson ResultDocument::document() const {
    ojson d = doc_;
    d["status"] = failed_ ? "fail" : "pass";
    return d;
}

std::string ResultDocument::to_json() const { return document().dump(2) + "\n"; }

std::string ResultDocument::to_text() const {
    const ojson d = document();
    std::ostringstream os;
    for (const char* k : {"command", "input_hash", "cutoff"})
        os << k << ": " << scalar_str(d.at(k)) << "\n";
    if (!d.at("parameters").empty()) render_value(os, "parameters", d.at("parameters"), 0);
    if (!d.at("results").empty()) render_value(os, "results", d.at("results"), 0);

    const ojson& reports = d.at("reports");
    if (!reports.empty()) {
        os << "reports:\n";
        for (const auto& r : reports) {
            const auto& items = r.at("items");
            int ok = 0;
            for (const auto& it : items) ok += it.at("ok").get<bool>() ? 1 : 0;
            os << "  " << r.at("name").get<std::string>() << ": ";
            if (r.at("all_ok").get<bool>()) {
                os << "pass (" << items.size() << " items)\n";
            } else {
                os << "FAIL (" << ok << "/" << items.size() << " items ok)\n";
                for (const auto& it : items)
                    if (!it.at("ok").get<bool>())
                        os << "    failed: " << it.at("name").get<std::string>() << "\n";
            }
        }
    }
    os << "status: " << d.at("status").get<std::string>() << "\n";
    return os.str();
}

}  // namespace ydn
