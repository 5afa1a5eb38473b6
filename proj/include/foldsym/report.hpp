#ifndef FOLDSYM_REPORT_HPP
#define FOLDSYM_REPORT_HPP

#include <string>
#include <vector>

namespace foldsym {

// Line-delimited records with stable key order, and comma-separated tables
// with a header row. All numbers print with "%.12g" so identical runs give
// identical bytes.
std::string format_double(double v);

class RecordWriter {
public:
    RecordWriter& field(const std::string& key, const std::string& value);
    RecordWriter& field(const std::string& key, double value);
    RecordWriter& field(const std::string& key, long value);
    RecordWriter& field(const std::string& key, bool value);
    void end_record();

    const std::string& str() const { return out_; }

private:
    std::string line_;
    std::string out_;
};

class TableWriter {
public:
    explicit TableWriter(std::vector<std::string> header);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& values);
    const std::string& str() const { return out_; }

private:
    size_t width_;
    std::string out_;
};

void write_output(const std::string& text, const std::string& path_or_empty);

} // namespace foldsym

#endif
