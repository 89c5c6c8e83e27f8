#pragma once

#include "curvforge/config.hpp"
#include "curvforge/linalg.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace curvforge {

// Deterministic run manifest: sorted keys, fixed number formatting, no
// timestamps, so identical configs reproduce byte-identical files.
class RunManifest {
  public:
    explicit RunManifest(const std::string& command);

    void echo_config(const RunConfig& cfg);
    void set(const std::string& key, double value);
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, bool value);
    void set(const std::string& key, int value);
    void set_point(const std::string& key, const Vec4& x);
    void add_check(const std::string& name, bool pass, double margin,
                   const std::string& detail = "");

    bool all_passed() const;
    std::string to_string() const;
    void write(const std::string& path) const;

    nlohmann::json& json() { return j_; }

  private:
    nlohmann::json j_;
};

// "%.17g" with a fixed decimal point; shared by manifests and CSV output.
std::string format_number(double v);

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    ~CsvWriter();
    void row(const std::vector<double>& values);
    void close();

  private:
    struct Impl;
    Impl* impl_;
};

// Small gnuplot driver text for a CSV slice.
std::string gnuplot_script(const std::string& csv_name, const std::string& title, int xcol,
                           int ycol);

}  // namespace curvforge
