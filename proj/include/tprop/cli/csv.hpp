#pragma once

#include <string>
#include <vector>

namespace tprop::cli {

// Plain-text CSV with a header row; numbers rendered with 17 significant
// digits so files round-trip doubles and repeat runs are bit-identical.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);
    ~CsvWriter();
    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void row(const std::vector<double>& values);
    const std::string& path() const { return path_; }

private:
    std::string path_;
    void* file_;
    size_t n_columns_;
};

}  // namespace tprop::cli
