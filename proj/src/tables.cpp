#include "qdn/tables.hpp"

#include <sstream>

#include "qdn/enumerate.hpp"
#include "qdn/error.hpp"
#include "qdn/figure3_data.hpp"
#include "qdn/units.hpp"

namespace qdn::tables {

namespace {

constexpr std::string_view root_sign = "√";

std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, '\t')) out.push_back(cell);
    return out;
}

Integer parse_signed(std::string_view text, const Integer& empty_value)
{
    if (text.empty() || text == "+") return empty_value;
    if (text == "-") return -empty_value;
    if (text.front() == '+') text.remove_prefix(1);
    return parse_integer(std::string(text));
}

} // namespace

const std::vector<std::int64_t>& unit_table_fields()
{
    static const std::vector<std::int64_t> fields{2,  3,  5,  6,  7,  10, 11, 13, 14, 15, 17, 19,
                                                  21, 22, 23, 26, 29, 30, 31, 33, 34, 35, 37, 38,
                                                  39, 41, 42, 43, 46, 47, 51, 53, 55, 57};
    return fields;
}

const std::vector<std::int64_t>& kappa_table_fields()
{
    static const std::vector<std::int64_t> fields{3,  6,  7,  11, 14, 15, 19, 21, 22, 23,
                                                  30, 31, 33, 34, 35, 38, 39, 42, 46};
    return fields;
}

std::vector<UnitRow> unit_table()
{
    std::vector<UnitRow> rows;
    for (std::int64_t n : unit_table_fields()) {
        const FundamentalUnit eps = fundamental_unit(QuadField(n));
        rows.push_back({n, eps.t, eps.u, eps.unit_norm});
    }
    return rows;
}

std::vector<KappaRow> kappa_table()
{
    std::vector<KappaRow> rows;
    for (std::int64_t n : kappa_table_fields()) {
        const QuadField field(n);
        const Kappas k = kappas(field);
        rows.push_back({n, fundamental_unit(field).t, k.kappa1, k.kappa2});
    }
    return rows;
}

std::string format_unit_table(const std::vector<UnitRow>& rows)
{
    std::string out = "# N\tt_N\tu_N\n";
    for (const UnitRow& r : rows) out += std::to_string(r.n) + "\t" + to_string(r.t) + "\t" + to_string(r.u) + "\n";
    return out;
}

std::string format_kappa_table(const std::vector<KappaRow>& rows)
{
    std::string out = "# N\tt_N\tkappa1\tkappa2\n";
    for (const KappaRow& r : rows) {
        out += std::to_string(r.n) + "\t" + to_string(r.t) + "\t" + to_string(r.kappa1) + "\t" + to_string(r.kappa2) +
               "\n";
    }
    return out;
}

std::vector<QuantumGroupRow> parse_quantum_group_rows(std::string_view tsv)
{
    std::vector<QuantumGroupRow> rows;
    std::istringstream in{std::string(tsv)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        const auto cells = split_tabs(line);
        if (cells.size() != 7) raise(ErrorKind::InvalidArgument, "expected 7 columns: " + line);
        try {
            rows.push_back({cells[0], std::stoi(cells[1]), std::stoi(cells[2]), parse_integer(cells[3]),
                            std::stol(cells[4]), std::stoll(cells[5]), cells[6] == "1"});
        } catch (const std::logic_error&) {
            raise(ErrorKind::InvalidArgument, "malformed row: " + line);
        }
    }
    return rows;
}

const std::vector<QuantumGroupRow>& quantum_group_rows()
{
    static const std::vector<QuantumGroupRow> rows = parse_quantum_group_rows(data::figure3_tsv);
    return rows;
}

QuadInt quantum_group_value(const QuantumGroupRow& row)
{
    const QuadField field(row.n);
    QuadInt value = unit_power(fundamental_unit(field), row.unit_power) * row.ell;
    if (row.sqrt_n) value *= QuadInt::sqrt_n(field);
    return value;
}

QuantumGroupCheck check_quantum_group_row(const QuantumGroupRow& row)
{
    const QuadInt value = quantum_group_value(row);
    const CanonicalFactorization f = canonical_factor(value);
    const Delta expected{row.sqrt_n ? 1 : 0, 0, 0};
    const bool matches = f.field == QuadField(row.n) && f.ell == row.ell && f.m == row.unit_power && f.delta == expected;
    return {row, value, is_dnumber(value), in_dplus(value), f, matches};
}

QuadInt parse_display(const QuadField& field, std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    bool half = false;
    const std::string half_prefix = "(1/2)(";
    if (s.rfind(half_prefix, 0) == 0 && !s.empty() && s.back() == ')') {
        half = true;
        s = s.substr(half_prefix.size(), s.size() - half_prefix.size() - 1);
    }

    Integer a = 0;
    Integer b = 0;
    const std::size_t root = s.find(root_sign);
    if (root == std::string::npos) {
        a = parse_integer(s);
    } else {
        const std::string radicand = s.substr(root + root_sign.size());
        if (radicand != std::to_string(field.n()))
            raise(ErrorKind::FieldMismatch, "expected √" + std::to_string(field.n()) + " in " + std::string(text));
        const std::string head = s.substr(0, root);
        const std::size_t split = head.find_last_of("+-");
        if (split == std::string::npos || split == 0) {
            b = parse_signed(head, 1);
        } else {
            a = parse_integer(head.substr(0, split));
            b = parse_signed(head.substr(split), 1);
        }
    }
    return half ? QuadInt(field, a, b) : QuadInt(field, 2 * a, 2 * b);
}

} // namespace qdn::tables
