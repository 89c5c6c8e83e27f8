#include "curvforge/manifest.hpp"

#include <cstdio>
#include <fstream>

namespace curvforge {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RunManifest::RunManifest(const std::string& command) {
    j_["command"] = command;
    j_["format_version"] = 1;
    j_["checks"] = nlohmann::json::object();
}

void RunManifest::echo_config(const RunConfig& cfg) {
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [k, v] : cfg.entries()) c[k] = v;
    j_["config"] = c;
}

// numbers are stored as strings under a fixed format so serialization is
// byte-stable across platforms and json libraries
void RunManifest::set(const std::string& key, double value) { j_[key] = format_number(value); }
void RunManifest::set(const std::string& key, const std::string& value) { j_[key] = value; }
void RunManifest::set(const std::string& key, bool value) { j_[key] = value; }
void RunManifest::set(const std::string& key, int value) { j_[key] = value; }

void RunManifest::set_point(const std::string& key, const Vec4& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) arr.push_back(format_number(x[i]));
    j_[key] = arr;
}

void RunManifest::add_check(const std::string& name, bool pass, double margin,
                            const std::string& detail) {
    nlohmann::json c;
    c["pass"] = pass;
    c["margin"] = format_number(margin);
    if (!detail.empty()) c["detail"] = detail;
    j_["checks"][name] = c;
}

bool RunManifest::all_passed() const {
    for (const auto& [name, c] : j_["checks"].items()) {
        (void)name;
        if (!c.value("pass", false)) return false;
    }
    return true;
}

std::string RunManifest::to_string() const { return j_.dump(2) + "\n"; }

void RunManifest::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest: " + path);
    out << to_string();
}

struct CsvWriter::Impl {
    std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : impl_(new Impl) {
    impl_->out.open(path, std::ios::binary);
    if (!impl_->out) throw std::runtime_error("cannot write csv: " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) impl_->out << ',';
        impl_->out << header[i];
    }
    impl_->out << '\n';
}

CsvWriter::~CsvWriter() {
    close();
    delete impl_;
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) impl_->out << ',';
        impl_->out << format_number(values[i]);
    }
    impl_->out << '\n';
}

void CsvWriter::close() {
    if (impl_->out.is_open()) impl_->out.close();
}

std::string gnuplot_script(const std::string& csv_name, const std::string& title, int xcol,
                           int ycol) {
    std::string s;
    s += "set datafile separator ','\n";
    s += "set key off\n";
    s += "set title '" + title + "'\n";
    s += "plot '" + csv_name + "' using " + std::to_string(xcol) + ":" + std::to_string(ycol) +
         " with lines\n";
    return s;
}

}  // namespace curvforge
