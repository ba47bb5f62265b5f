#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace dfact::cli {

using nlohmann::json;

namespace {

std::string format_double(double x) {
    if (std::isnan(x)) return "null";
    if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string scalar_text(const json& j) {
    switch (j.type()) {
        case json::value_t::number_float: return format_double(j.get<double>());
        case json::value_t::number_integer: return std::to_string(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return std::to_string(j.get<std::uint64_t>());
        default: return j.dump();
    }
}

void dump_json(const json& j, std::ostringstream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    const std::string close(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted keys
            if (!first) os << ",\n";
            first = false;
            os << pad << json(it.key()).dump() << ": ";
            dump_json(it.value(), os, indent + 2);
        }
        os << '\n' << close << '}';
    } else if (j.is_array()) {
        if (j.empty()) {
            os << "[]";
            return;
        }
        const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
        if (flat) {
            os << '[';
            for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar_text(j[i]);
            os << ']';
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ",\n";
            os << pad;
            dump_json(j[i], os, indent + 2);
        }
        os << '\n' << close << ']';
    } else {
        os << scalar_text(j);
    }
}

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        std::string v = j.is_string() ? j.get<std::string>() : scalar_text(j);
        if (v.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            v = q + "\"";
        }
        os << path << ',' << v << '\n';
    }
}

}  // namespace

std::string emit_report(const json& report, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::json) {
        dump_json(report.is_null() ? json::object() : report, os, 0);
        os << '\n';
    } else {
        os << "key,value\n";
        if (!report.is_null()) flatten(report, "", os);
    }
    return os.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        f << content;
        f.flush();
        if (!f) throw std::runtime_error("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move report into '" + path + "': " + ec.message());
    }
}

}  // namespace dfact::cli
