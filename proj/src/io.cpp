#include "graphrank/io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "graphrank/errors.hpp"

namespace graphrank {

namespace {

std::string location(const std::string& path, std::size_t line) {
    return path + ":" + std::to_string(line);
}

std::vector<std::string> split_fields(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, delim)) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == delim) {
        fields.push_back("");
    }
    return fields;
}

double parse_number(const std::string& field, const std::string& where) {
    const char* begin = field.c_str();
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(begin, &end);
    while (end != nullptr && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) {
        ++end;
    }
    if (end == begin || (end != nullptr && *end != '\0')) {
        throw ValidationError(where + ": cannot parse '" + field + "' as a number");
    }
    if (errno == ERANGE || !std::isfinite(value)) {
        throw ValidationError(where + ": value '" + field + "' is out of range");
    }
    return value;
}

std::int64_t parse_integer(const std::string& field, const std::string& where) {
    const char* begin = field.c_str();
    char* end = nullptr;
    errno = 0;
    const long long value = std::strtoll(begin, &end, 10);
    while (end != nullptr && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) {
        ++end;
    }
    if (end == begin || (end != nullptr && *end != '\0') || errno == ERANGE) {
        throw ValidationError(where + ": cannot parse '" + field + "' as an integer ID");
    }
    return value;
}

bool blank(const std::string& line) {
    for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Dataset load_features(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open input file " + path);
    }

    std::vector<std::vector<double>> rows;
    std::vector<std::int64_t> ids;
    std::size_t line_no = 0;
    std::size_t cols = 0;
    char delim = '\0';
    bool header_pending = opts.has_header;

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (blank(line)) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        if (delim == '\0') {
            delim = line.find(',') != std::string::npos ? ',' : '\t';
        }
        const std::vector<std::string> fields = split_fields(line, delim);
        const std::size_t id_offset = opts.id_column ? 1 : 0;
        if (fields.size() <= id_offset) {
            throw ValidationError(location(path, line_no) + ": no feature fields");
        }
        if (cols == 0) {
            cols = fields.size() - id_offset;
        } else if (fields.size() - id_offset != cols) {
            std::ostringstream msg;
            msg << location(path, line_no) << ": expected " << cols << " feature fields, got "
                << fields.size() - id_offset;
            throw ValidationError(msg.str());
        }
        if (opts.id_column) {
            ids.push_back(parse_integer(fields[0], location(path, line_no)));
        }
        std::vector<double> row;
        row.reserve(cols);
        for (std::size_t f = id_offset; f < fields.size(); ++f) {
            row.push_back(parse_number(fields[f], location(path, line_no)));
        }
        rows.push_back(std::move(row));
    }

    if (rows.empty()) {
        throw ValidationError(path + ": no data rows");
    }

    Dataset data;
    data.features.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            data.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }
    if (opts.id_column) {
        data.ids = std::move(ids);
    } else {
        data.ids.reserve(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            data.ids.push_back(static_cast<std::int64_t>(r) + opts.id_base);
        }
    }
    return data;
}

std::vector<std::int64_t> parse_seed_spec(const std::string& spec) {
    if (spec.empty()) {
        throw ValidationError("empty seed specification");
    }

    // Inline form: integers separated by commas. Anything else is a file path.
    const bool inline_form =
        spec.find_first_not_of("0123456789,+- \t") == std::string::npos;

    std::vector<std::int64_t> seed_ids;
    if (inline_form) {
        for (const std::string& field : split_fields(spec, ',')) {
            seed_ids.push_back(parse_integer(field, "seed list"));
        }
    } else {
        std::ifstream in(spec);
        if (!in) {
            throw ValidationError("cannot open seed file " + spec);
        }
        std::size_t line_no = 1;
        char c;
        std::string buffer;
        while (in.get(c)) {
            if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                if (!buffer.empty()) {
                    seed_ids.push_back(parse_integer(buffer, location(spec, line_no)));
                    buffer.clear();
                }
                if (c == '\n') ++line_no;
            } else {
                buffer.push_back(c);
            }
        }
        if (!buffer.empty()) {
            seed_ids.push_back(parse_integer(buffer, location(spec, line_no)));
        }
    }
    if (seed_ids.empty()) {
        throw ValidationError("seed specification '" + spec + "' contains no IDs");
    }
    return seed_ids;
}

SeedSet resolve_seeds(const Dataset& data, const std::vector<std::int64_t>& seed_ids) {
    std::unordered_map<std::int64_t, Eigen::Index> index_of;
    index_of.reserve(data.ids.size());
    for (std::size_t r = 0; r < data.ids.size(); ++r) {
        const auto [it, inserted] = index_of.emplace(data.ids[r], static_cast<Eigen::Index>(r));
        if (!inserted) {
            throw ValidationError("duplicate ID " + std::to_string(data.ids[r]) +
                                  " in the input; seed resolution is ambiguous");
        }
    }
    std::vector<Eigen::Index> indices;
    indices.reserve(seed_ids.size());
    for (std::int64_t id : seed_ids) {
        const auto it = index_of.find(id);
        if (it == index_of.end()) {
            throw ValidationError("seed ID " + std::to_string(id) +
                                  " does not match any input row");
        }
        indices.push_back(it->second);
    }
    return SeedSet(std::move(indices), data.rows());
}

std::string format_double(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
    return buf;
}

std::string format_percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

}  // namespace graphrank
