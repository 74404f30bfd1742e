#include "relalt/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "relalt/errors.hpp"
#include "relalt/numeric.hpp"

namespace relalt {

namespace {

std::string csv_join(std::initializer_list<std::string> cells) {
    std::string row;
    for (const auto& cell : cells) {
        if (!row.empty()) row += ',';
        row += cell;
    }
    return row;
}

double parse_cell(std::string_view cell, int line_no) {
    // Trim surrounding blanks; from_chars wants the bare number.
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t'))
        cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' ||
                             cell.back() == '\r'))
        cell.remove_suffix(1);
    double value = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
        throw InvalidInput("matrix CSV line " + std::to_string(line_no) +
                           ": cannot parse \"" + std::string(cell) + "\"");
    return value;
}

}  // namespace

std::string to_json_record(const FrameScalingRecord& rec) {
    nlohmann::ordered_json j;
    j["mode_index"] = rec.mode_index;
    j["lambda_s"] = rec.lambda_s;
    j["gamma"] = rec.gamma;
    j["lambda_m"] = rec.lambda_m;
    j["abs_err"] = rec.abs_err;
    j["rel_err"] = rec.rel_err;
    j["pass"] = rec.pass;
    return j.dump();
}

std::string frame_scaling_csv_header() {
    return "mode_index,lambda_s,gamma,lambda_m,abs_err,rel_err,pass";
}

std::string to_csv_row(const FrameScalingRecord& rec) {
    return csv_join({std::to_string(rec.mode_index), format_double(rec.lambda_s),
                     format_double(rec.gamma), format_double(rec.lambda_m),
                     format_double(rec.abs_err), format_double(rec.rel_err),
                     rec.pass ? "true" : "false"});
}

std::string to_json_record(const HJMassRecord& rec) {
    nlohmann::ordered_json j;
    j["gamma"] = rec.gamma;
    j["mass_s"] = rec.mass_s;
    j["mass_m"] = rec.mass_m;
    j["lambda1_s"] = rec.lambda1_s;
    j["lambda1_m"] = rec.lambda1_m;
    j["lhs"] = rec.lhs;
    j["rhs"] = rec.rhs;
    j["abs_err"] = rec.abs_err;
    j["rel_err"] = rec.rel_err;
    j["pass"] = rec.pass;
    return j.dump();
}

std::string hj_mass_csv_header() {
    return "gamma,mass_s,mass_m,lambda1_s,lambda1_m,lhs,rhs,abs_err,rel_err,pass";
}

std::string to_csv_row(const HJMassRecord& rec) {
    return csv_join({format_double(rec.gamma), format_double(rec.mass_s),
                     format_double(rec.mass_m), format_double(rec.lambda1_s),
                     format_double(rec.lambda1_m), format_double(rec.lhs),
                     format_double(rec.rhs), format_double(rec.abs_err),
                     format_double(rec.rel_err), rec.pass ? "true" : "false"});
}

std::vector<double> load_dense_csv(const std::string& path, int& n) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open matrix file: " + path);

    std::vector<double> values;
    std::size_t columns = 0;
    std::size_t rows = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest(line);
        if (!rest.empty() && rest.back() == '\r') rest.remove_suffix(1);
        // Allow trailing blank lines but not blank rows in the middle.
        bool blank = true;
        for (char ch : rest)
            if (ch != ' ' && ch != '\t') { blank = false; break; }
        if (blank) {
            if (in.peek() != std::char_traits<char>::eof() && rows > 0)
                throw InvalidInput("matrix CSV line " + std::to_string(line_no) +
                                   ": blank row");
            continue;
        }

        std::size_t cells = 0;
        while (true) {
            const auto comma = rest.find(',');
            values.push_back(parse_cell(rest.substr(0, comma), line_no));
            ++cells;
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (columns == 0)
            columns = cells;
        else if (cells != columns)
            throw InvalidInput("matrix CSV line " + std::to_string(line_no) + ": " +
                               std::to_string(cells) + " cells, expected " +
                               std::to_string(columns));
        ++rows;
    }
    if (rows == 0) throw InvalidInput("matrix CSV is empty: " + path);
    if (rows != columns)
        throw InvalidInput("matrix CSV must be square, got " + std::to_string(rows) +
                           " x " + std::to_string(columns));
    n = static_cast<int>(rows);
    return values;
}

}  // namespace relalt
