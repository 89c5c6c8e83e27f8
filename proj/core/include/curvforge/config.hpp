#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace curvforge {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key-value configuration: one `key = value` per line, '#' comments.
class RunConfig {
  public:
    RunConfig() = default;
    static RunConfig from_file(const std::string& path);
    static RunConfig from_string(const std::string& text);

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    unsigned get_unsigned(const std::string& key, unsigned fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

}  // namespace curvforge
