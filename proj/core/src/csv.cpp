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

#include "vlcris/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vlcris
{

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string to_csv_string(const csv_table &table)
{
    std::string out;
    for (const std::string &note : table.notes)
    {
        out += "# ";
        out += note;
        out += '\n';
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c)
    {
        if (c)
            out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const std::vector<double> &row : table.rows)
    {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("to_csv_string: row width mismatch");
        for (std::size_t c = 0; c < row.size(); ++c)
        {
            if (c)
                out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const csv_table &table, const std::string &path)
{
    std::string body = to_csv_string(table);
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("write_csv: cannot open '" + path + "'");
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!f)
        throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

csv_table read_csv(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("read_csv: cannot open '" + path + "'");
    csv_table table;
    std::string line;
    bool header_seen = false;
    while (std::getline(f, line))
    {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '#')
        {
            std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
            table.notes.push_back(line.substr(start));
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        if (!header_seen)
        {
            while (std::getline(ss, cell, ','))
                table.columns.push_back(cell);
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ss, cell, ','))
        {
            try
            {
                row.push_back(std::stod(cell));
            }
            catch (const std::exception &)
            {
                throw std::runtime_error("read_csv: non-numeric cell '" + cell + "' in '" +
                                         path + "'");
            }
        }
        if (row.size() != table.columns.size())
            throw std::runtime_error("read_csv: row width mismatch in '" + path + "'");
        table.rows.push_back(std::move(row));
    }
    if (!header_seen)
        throw std::runtime_error("read_csv: missing header in '" + path + "'");
    return table;
}

} // namespace vlcris
