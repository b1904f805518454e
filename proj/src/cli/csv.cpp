#include "tprop/cli/csv.hpp"

#include <cstdio>

#include "tprop/errors.hpp"

namespace tprop::cli {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns)
    : path_(path), n_columns_(columns.size()) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw Error("cannot open output file '" + path + "'");
    file_ = f;
    for (size_t i = 0; i < columns.size(); ++i)
        std::fprintf(f, "%s%s", i ? "," : "", columns[i].c_str());
    std::fputc('\n', f);
}

CsvWriter::~CsvWriter() {
    if (file_) std::fclose(static_cast<std::FILE*>(file_));
}

void CsvWriter::row(const std::vector<double>& values) {
    std::FILE* f = static_cast<std::FILE*>(file_);
    if (values.size() != n_columns_) throw Error("csv row width mismatch");
    for (size_t i = 0; i < values.size(); ++i)
        std::fprintf(f, "%s%.17g", i ? "," : "", values[i]);
    std::fputc('\n', f);
}

}  // namespace tprop::cli
