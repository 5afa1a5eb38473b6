#include "foldsym/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "foldsym/errors.hpp"

namespace foldsym {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

RecordWriter& RecordWriter::field(const std::string& key, const std::string& value) {
    if (!line_.empty()) line_ += " ";
    line_ += key + "=" + value;
    return *this;
}

RecordWriter& RecordWriter::field(const std::string& key, double value) {
    return field(key, format_double(value));
}

RecordWriter& RecordWriter::field(const std::string& key, long value) {
    return field(key, std::to_string(value));
}

RecordWriter& RecordWriter::field(const std::string& key, bool value) {
    return field(key, std::string(value ? "true" : "false"));
}

void RecordWriter::end_record() {
    out_ += line_;
    out_ += "\n";
    line_.clear();
}

TableWriter::TableWriter(std::vector<std::string> header) : width_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out_ += ",";
        out_ += header[i];
    }
    out_ += "\n";
}

void TableWriter::row(const std::vector<double>& values) {
    if (values.size() != width_) throw Error("table row width mismatch");
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ += ",";
        out_ += format_double(values[i]);
    }
    out_ += "\n";
}

void TableWriter::raw_row(const std::vector<std::string>& values) {
    if (values.size() != width_) throw Error("table row width mismatch");
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ += ",";
        out_ += values[i];
    }
    out_ += "\n";
}

void write_output(const std::string& text, const std::string& path_or_empty) {
    if (path_or_empty.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path_or_empty, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path_or_empty + "'");
    out << text;
}

} // namespace foldsym
