#pragma once

// Deterministic CSV emission. Every file starts with a "# key=value"
// metadata block (seed, trials, config hash, anything scenario-specific),
// then the column header, then the rows. Numbers are formatted with %.12g
// under the C locale and lines end with \n, so identical inputs produce
// byte-identical files on every platform.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace parkrelay {

std::string fmt_double(double v);
std::string fmt_int(long long v);

struct CsvTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const CsvTable& table);
void write_file(const std::string& path, const std::string& content);

}  // namespace parkrelay
