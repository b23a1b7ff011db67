// vlcris - indoor visible-light link simulator with a mirror-array reflector
// and a liquid-crystal receiver front end
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef vlcris_csv_H
#define vlcris_csv_H

#include <string>
#include <vector>

namespace vlcris
{

// Numeric result table. Notes are emitted before the header as lines
// starting with "# " and skipped on read.
struct csv_table
{
    std::vector<std::string> notes;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Shortest representation with 9 significant digits (printf %.9g).
std::string format_double(double v);

// Serialize with LF line endings. Every row must match the column count.
std::string to_csv_string(const csv_table &table);

// Write to path; throws std::runtime_error with the path on failure.
void write_csv(const csv_table &table, const std::string &path);

// Parse a file produced by write_csv; comment lines are collected as notes.
csv_table read_csv(const std::string &path);

} // namespace vlcris

#endif
