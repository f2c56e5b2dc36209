#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qdn/dnumbers.hpp"
#include "qdn/integer.hpp"
#include "qdn/quadring.hpp"

namespace qdn::tables {

/// Squarefree N printed in the fundamental unit table.
const std::vector<std::int64_t>& unit_table_fields();
/// Squarefree N with unit norm +1 printed in the kappa table.
const std::vector<std::int64_t>& kappa_table_fields();

struct UnitRow {
    std::int64_t n;
    Integer t;
    Integer u;
    int norm;
};

struct KappaRow {
    std::int64_t n;
    Integer t;
    Integer kappa1;
    Integer kappa2;
};

std::vector<UnitRow> unit_table();
std::vector<KappaRow> kappa_table();

/// Tab separated with a leading "# ..." header; the layout of the golden files.
std::string format_unit_table(const std::vector<UnitRow>& rows);
std::string format_kappa_table(const std::vector<KappaRow>& rows);

/// One strictly quadratic X_{n,k}: ell * eps_N^unit_power * sqrt(N)^sqrt_n.
struct QuantumGroupRow {
    std::string family;
    int rank;
    int level;
    Integer ell;
    long unit_power;
    std::int64_t n;
    bool sqrt_n;
};

std::vector<QuantumGroupRow> parse_quantum_group_rows(std::string_view tsv);
/// The rows shipped with the library.
const std::vector<QuantumGroupRow>& quantum_group_rows();

QuadInt quantum_group_value(const QuantumGroupRow& row);

struct QuantumGroupCheck {
    QuantumGroupRow row;
    QuadInt value;
    bool is_dnumber;
    bool in_dplus;
    CanonicalFactorization factor;
    bool factor_matches;

    bool ok() const { return is_dnumber && in_dplus && factor_matches; }
};

QuantumGroupCheck check_quantum_group_row(const QuantumGroupRow& row);

/// Parses the display forms "√N", "b√N", "a+b√N", "a-b√N" and
/// "(1/2)(a+b√N)" in the given field.
QuadInt parse_display(const QuadField& field, std::string_view text);

} // namespace qdn::tables
