#pragma once

#include <string>
#include <vector>

namespace dsharp::io {

// One numeric column, optional header "x". Parse failures report the
// 1-based line number.
std::vector<double> read_data_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

// rows of equal length; header names the columns
void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

}  // namespace dsharp::io
