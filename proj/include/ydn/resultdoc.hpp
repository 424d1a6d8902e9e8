#pragma once

#include <string>

#include <json.hpp>

#include "ydn/bosonization.hpp"

namespace ydn {

using ojson = nlohmann::ordered_json;

/**
 * @brief Machine-readable command output with a fixed field order.
 *
 * Fields are inserted in a fixed sequence and rendered with a fixed
 * indentation, so equal inputs produce byte-identical documents across
 * runs and parallelism settings. Wall-clock timing is deliberately kept
 * out of the document for that reason; the tool reports it on stderr.
 */
class ResultDocument {
public:
    ResultDocument(const std::string& command, const std::string& input_hash, int cutoff);

    void set_parameter(const std::string& key, const ojson& value);
    void set_result(const std::string& key, const ojson& value);
    void add_report(const std::string& name, const CheckReport& rep);

    /// True when some report item failed.
    bool failed() const { return failed_; }

    /// The document with the status field filled in.
    ojson document() const;

    std::string to_json() const;

    /// Plain-text rendering: header lines, result tables (string lists one
    /// per line, numeric lists space-joined), compact report summaries.
    std::string to_text() const;

private:
    ojson doc_;
    bool failed_ = false;
};

}  // namespace ydn
