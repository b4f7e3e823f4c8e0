#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ridgelab/fields.hpp"

namespace ridgelab {

class FieldFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AnyField = std::variant<SampledField, SinogramField, RidgeletField>;

// "field", "sinogram" or "ridgelet".
std::string field_kind(const AnyField& field);

// Element counts per axis in payload order (direction slowest, then b/p, then a).
std::vector<std::size_t> field_dims(const AnyField& field);

// One JSON header line, a newline, then little-endian (re, im) float64 pairs.
void write_field(std::ostream& out, const AnyField& field);
AnyField read_field(std::istream& in);

void write_field_file(const std::string& path, const AnyField& field);
AnyField read_field_file(const std::string& path);

// One identity check as printed by the command line tool.
struct ReportRow {
    std::string check;
    cplx lhs;
    cplx rhs;
    double gap;
    double tol;
    bool pass;
};

ReportRow make_row(const std::string& check, const IdentityCheck& result, double tol);

inline constexpr const char* kReportHeader = "check,lhs_re,lhs_im,rhs_re,rhs_im,gap,tol,pass";

void write_report(std::ostream& out, const std::vector<ReportRow>& rows);

}  // namespace ridgelab
