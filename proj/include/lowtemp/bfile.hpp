#ifndef LOWTEMP_BFILE_HPP
#define LOWTEMP_BFILE_HPP

#include <cctype>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <lowtemp/partition.hpp>
#include <lowtemp/rational.hpp>

namespace lowtemp
{

// One "index value" line of an OEIS b-file.
struct BFileRecord {
    long index = 0;
    BigInt value;
};

// Parses b-file text. Blank lines and lines starting with '#' are skipped;
// anything else must be two integers separated by whitespace.
inline std::vector<BFileRecord> parse_bfile(std::istream &in)
{
    std::vector<BFileRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        fields >> index_text >> value_text;
        if (value_text.empty() || (fields >> extra)) {
            throw std::runtime_error("b-file line " + std::to_string(line_no) + ": expected 'index value'");
        }
        BFileRecord rec;
        try {
            std::size_t used = 0;
            rec.index = std::stol(index_text, &used);
            if (used != index_text.size()) {
                throw std::invalid_argument("index");
            }
            if (rec.value.set_str(value_text, 10) != 0) {
                throw std::invalid_argument("value");
            }
        } catch (const std::exception &) {
            throw std::runtime_error("b-file line " + std::to_string(line_no) + ": malformed '" + line + "'");
        }
        records.push_back(std::move(rec));
    }
    return records;
}

inline std::vector<BFileRecord> parse_bfile(const std::string &text)
{
    std::istringstream in(text);
    return parse_bfile(in);
}

// A002890 lists the nonzero coefficients 1, 2, 5, 14, ... starting at index 1;
// index i is the energy offset N = 2 i + 2.
inline std::size_t a002890_energy_offset(long index) { return static_cast<std::size_t>(2 * index + 2); }

struct BFileComparison {
    std::size_t compared = 0;
    std::optional<long> first_mismatch_index;
    BigInt expected;   // b-file value at the first mismatch
    Rational computed; // g(N) at the first mismatch

    bool ok() const { return compared > 0 && !first_mismatch_index; }
};

// Compares the first max_terms records (all when max_terms is 0) against g(N).
inline BFileComparison compare_with_bfile(const std::vector<BFileRecord> &records, std::size_t max_terms = 0)
{
    if (records.empty()) {
        throw std::runtime_error("b-file contains no terms");
    }
    const std::size_t count = max_terms == 0 ? records.size() : std::min(max_terms, records.size());
    std::size_t n_max = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (records[i].index < 1) {
            throw std::runtime_error("b-file index " + std::to_string(records[i].index) + " out of range");
        }
        n_max = std::max(n_max, a002890_energy_offset(records[i].index));
    }
    const DensityOfStates dos = dos_infinite(n_max, false);
    BFileComparison result;
    for (std::size_t i = 0; i < count; ++i) {
        const auto &rec = records[i];
        const Rational &g = dos[a002890_energy_offset(rec.index)];
        ++result.compared;
        if (g != Rational(rec.value)) {
            result.first_mismatch_index = rec.index;
            result.expected = rec.value;
            result.computed = g;
            break;
        }
    }
    return result;
}

} // namespace lowtemp

#endif
