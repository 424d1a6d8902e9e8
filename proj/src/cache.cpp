#include "ydn/cache.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ydn/errors.hpp"
#include "ydn/resultdoc.hpp"

namespace fs = std::filesystem;

namespace ydn {

namespace {

const char* kCacheTag = "ydnichols-cache-v1";

[[noreturn]] void corrupt(const std::string& what) {
    throw input_error("corrupt cache entry: " + what);
}

int get_int(const ojson& o, const char* key) {
    if (!o.contains(key) || !o.at(key).is_number_integer()) corrupt(std::string("field ") + key);
    return o.at(key).get<int>();
}

}  // namespace

TruncationSnapshot snapshot_of(const NicholsTruncation& B, const std::string& key) {
    TruncationSnapshot s;
    s.key = key;
    s.cutoff = B.cutoff();
    s.letters = B.letters();
    s.complete = B.complete();
    s.top_degree = B.top_degree();
    for (int n = 0; n <= B.cutoff(); ++n) {
        s.dims.push_back(B.dim(n));
        s.basis_words.push_back(B.basis_words(n));
        std::vector<std::pair<std::vector<int>, int>> table;
        for (const auto& [w, d] : B.dims_by_multidegree(n)) table.emplace_back(w, d);
        s.multidegree.push_back(std::move(table));
    }
    return s;
}

std::string serialize_snapshot(const TruncationSnapshot& s) {
    ojson o;
    o["format"] = kCacheTag;
    o["key"] = s.key;
    o["cutoff"] = s.cutoff;
    o["letters"] = s.letters;
    o["complete"] = s.complete;
    o["top_degree"] = s.top_degree;
    o["dims"] = s.dims;
    o["basis_words"] = s.basis_words;
    ojson md = ojson::array();
    for (const auto& table : s.multidegree) {
        ojson rows = ojson::array();
        for (const auto& [w, d] : table) {
            ojson r;
            r["weights"] = w;
            r["dim"] = d;
            rows.push_back(std::move(r));
        }
        md.push_back(std::move(rows));
    }
    o["multidegree"] = std::move(md);
    return o.dump(2) + "\n";
}

TruncationSnapshot deserialize_snapshot(const std::string& text) {
    const ojson o = ojson::parse(text, nullptr, false);
    if (o.is_discarded() || !o.is_object()) corrupt("not a json document");
    if (!o.contains("format") || o.at("format") != kCacheTag) corrupt("format tag mismatch");
    if (!o.contains("key") || !o.at("key").is_string()) corrupt("field key");

    TruncationSnapshot s;
    s.key = o.at("key").get<std::string>();
    s.cutoff = get_int(o, "cutoff");
    s.letters = get_int(o, "letters");
    if (!o.contains("complete") || !o.at("complete").is_boolean()) corrupt("field complete");
    s.complete = o.at("complete").get<bool>();
    s.top_degree = get_int(o, "top_degree");

    for (const char* key : {"dims", "basis_words", "multidegree"})
        if (!o.contains(key) || !o.at(key).is_array() ||
            (int)o.at(key).size() != s.cutoff + 1)
            corrupt(std::string("field ") + key);
    for (const auto& v : o.at("dims")) {
        if (!v.is_number_integer()) corrupt("dims entry");
        s.dims.push_back(v.get<int>());
    }
    for (const auto& row : o.at("basis_words")) {
        if (!row.is_array()) corrupt("basis_words entry");
        std::vector<int> words;
        for (const auto& v : row) {
            if (!v.is_number_integer()) corrupt("basis word");
            words.push_back(v.get<int>());
        }
        s.basis_words.push_back(std::move(words));
    }
    for (const auto& table : o.at("multidegree")) {
        if (!table.is_array()) corrupt("multidegree entry");
        std::vector<std::pair<std::vector<int>, int>> rows;
        for (const auto& r : table) {
            if (!r.is_object() || !r.contains("weights") || !r.at("weights").is_array())
                corrupt("multidegree row");
            std::vector<int> w;
            for (const auto& v : r.at("weights")) {
                if (!v.is_number_integer()) corrupt("multidegree weight");
                w.push_back(v.get<int>());
            }
            rows.emplace_back(std::move(w), get_int(r, "dim"));
        }
        s.multidegree.push_back(std::move(rows));
    }
    return s;
}

std::string TruncationCache::path_for(const std::string& key, int cutoff) const {
    return dir_ + "/" + key + "-d" + std::to_string(cutoff) + ".json";
}

std::optional<TruncationSnapshot> TruncationCache::load(const std::string& key, int cutoff) const {
    if (!enabled()) return std::nullopt;
    const std::string path = path_for(key, cutoff);
    std::ifstream f(path);
    if (!f) return std::nullopt;
    std::ostringstream buf;
    buf << f.rdbuf();
    try {
        TruncationSnapshot s = deserialize_snapshot(buf.str());
        if (s.key != key || s.cutoff != cutoff) corrupt("entry labeled for a different computation");
        return s;
    } catch (const input_error& e) {
        std::cerr << "warning: evicting " << path << " (" << e.what() << ")\n";
        std::error_code ec;
        fs::remove(path, ec);
        return std::nullopt;
    }
}

void TruncationCache::store(const TruncationSnapshot& s) const {
    if (!enabled()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    const std::string path = path_for(s.key, s.cutoff);
    // temp-then-rename keeps readers away from partial writes
    const std::string tmp = path + ".tmp" + std::to_string((long)::getpid());
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw input_error("cannot write cache entry '" + tmp + "'");
        f << serialize_snapshot(s);
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw input_error("cannot move cache entry into place at '" + path + "'");
    }
}

}  // namespace ydn
