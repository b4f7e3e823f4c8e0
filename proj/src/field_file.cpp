#include "ridgelab/field_file.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ridgelab {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "ridgelab-field";
constexpr int kVersion = 1;

json axis_json(const Axis& a) { return {{"min", a.min()}, {"max", a.max()}, {"count", a.count()}}; }

Axis axis_from(const json& j) { return Axis(j.at("min").get<double>(), j.at("max").get<double>(), j.at("count").get<std::size_t>()); }

json directions_json(const DirectionSet& d) {
    json vectors = json::array();
    for (std::size_t k = 0; k < d.size(); ++k) {
        json v = json::array();
        for (int c = 0; c < d.dimension(); ++c) v.push_back(d[k][static_cast<std::size_t>(c)]);
        vectors.push_back(v);
    }
    return {{"count", d.size()}, {"vectors", vectors}, {"weights", d.weights()}};
}

DirectionSet directions_from(const json& j, int n) {
    std::vector<Vec3> dirs;
    for (const auto& v : j.at("vectors")) {
        if (v.size() != static_cast<std::size_t>(n)) throw FieldFileError("direction vector has the wrong length");
        Vec3 u{0.0, 0.0, 0.0};
        for (int c = 0; c < n; ++c) u[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(c)].get<double>();
        dirs.push_back(u);
    }
    auto weights = j.at("weights").get<std::vector<double>>();
    if (dirs.size() != j.at("count").get<std::size_t>()) throw FieldFileError("direction count mismatch");
    return DirectionSet(n, std::move(dirs), std::move(weights));
}

json scales_json(const ScaleGrid& s) { return {{"min", s.a_min()}, {"max", s.a_max()}, {"count", s.count()}}; }

ScaleGrid scales_from(const json& j) {
    return ScaleGrid(j.at("min").get<double>(), j.at("max").get<double>(), j.at("count").get<std::size_t>());
}

const std::vector<cplx>& payload(const AnyField& f) {
    return std::visit([](const auto& v) -> const std::vector<cplx>& { return v.values; }, f);
}

json header_for(const AnyField& field) {
    json h{{"format", kFormat}, {"version", kVersion}, {"kind", field_kind(field)}, {"element", "c128"}};
    h["dims"] = field_dims(field);
    if (const auto* f = std::get_if<SampledField>(&field)) {
        h["dimension"] = f->grid.dimension();
        json axes = json::array();
        for (const Axis& a : f->grid.axes()) axes.push_back(axis_json(a));
        h["axes"] = axes;
    } else if (const auto* s = std::get_if<SinogramField>(&field)) {
        h["dimension"] = s->directions.dimension();
        h["directions"] = directions_json(s->directions);
        h["p_axis"] = axis_json(s->p_axis);
    } else {
        const auto& r = std::get<RidgeletField>(field);
        h["dimension"] = r.grid.dimension();
        h["directions"] = directions_json(r.grid.directions());
        h["b_axis"] = axis_json(r.grid.b_axis());
        h["scales"] = scales_json(r.grid.scales());
    }
    return h;
}

void put_f64(std::ostream& out, double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    unsigned char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<unsigned char>(bits >> (8 * b));
    out.write(reinterpret_cast<const char*>(bytes), 8);
}

double get_f64(const unsigned char* bytes) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
    return std::bit_cast<double>(bits);
}

}  // namespace

std::string field_kind(const AnyField& field) {
    switch (field.index()) {
        case 0: return "field";
        case 1: return "sinogram";
        default: return "ridgelet";
    }
}

std::vector<std::size_t> field_dims(const AnyField& field) {
    if (const auto* f = std::get_if<SampledField>(&field)) {
        std::vector<std::size_t> d;
        for (const Axis& a : f->grid.axes()) d.push_back(a.count());
        return d;
    }
    if (const auto* s = std::get_if<SinogramField>(&field)) return {s->directions.size(), s->p_axis.count()};
    const auto& r = std::get<RidgeletField>(field);
    return {r.grid.directions().size(), r.grid.b_axis().count(), r.grid.scales().count()};
}

void write_field(std::ostream& out, const AnyField& field) {
    out << header_for(field).dump() << '\n';
    for (const cplx& v : payload(field)) {
        put_f64(out, v.real());
        put_f64(out, v.imag());
    }
    if (!out) throw FieldFileError("write failed");
}

AnyField read_field(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FieldFileError("missing header line");
    json h;
    try {
        h = json::parse(line);
    } catch (const json::exception& e) {
        throw FieldFileError(std::string("malformed header: ") + e.what());
    }
    try {
        if (h.value("format", std::string()) != kFormat) throw FieldFileError("not a ridgelab field file");
        if (h.at("element").get<std::string>() != "c128") throw FieldFileError("unsupported element type");
        const std::string kind = h.at("kind").get<std::string>();
        const int n = h.at("dimension").get<int>();
        const auto dims = h.at("dims").get<std::vector<std::size_t>>();
        std::size_t count = 1;
        for (std::size_t d : dims) count *= d;

        std::vector<unsigned char> raw(16 * count);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(in.gcount()) != raw.size()) throw FieldFileError("payload shorter than header dims");
        if (in.peek() != std::char_traits<char>::eof()) throw FieldFileError("payload longer than header dims");
        std::vector<cplx> values(count);
        for (std::size_t q = 0; q < count; ++q) values[q] = {get_f64(&raw[16 * q]), get_f64(&raw[16 * q + 8])};

        AnyField out = [&]() -> AnyField {
            if (kind == "field") {
                std::vector<Axis> axes;
                for (const auto& a : h.at("axes")) axes.push_back(axis_from(a));
                return SampledField(CartesianGrid(std::move(axes)), std::move(values));
            }
            if (kind == "sinogram") {
                return SinogramField(directions_from(h.at("directions"), n), axis_from(h.at("p_axis")), std::move(values));
            }
            if (kind == "ridgelet") {
                YGrid g(directions_from(h.at("directions"), n), axis_from(h.at("b_axis")), scales_from(h.at("scales")));
                return RidgeletField(std::move(g), std::move(values));
            }
            throw FieldFileError("unknown kind '" + kind + "'");
        }();
        if (field_dims(out) != dims) throw FieldFileError("header dims disagree with axis descriptors");
        return out;
    } catch (const json::exception& e) {
        throw FieldFileError(std::string("incomplete header: ") + e.what());
    } catch (const ShapeError& e) {
        throw FieldFileError(std::string("inconsistent header: ") + e.what());
    }
}

void write_field_file(const std::string& path, const AnyField& field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FieldFileError("cannot open '" + path + "' for writing");
    write_field(out, field);
}

AnyField read_field_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FieldFileError("cannot open '" + path + "'");
    return read_field(in);
}

ReportRow make_row(const std::string& check, const IdentityCheck& result, double tol) {
    return {check, result.lhs, result.rhs, result.gap, tol, result.gap <= tol};
}

void write_report(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << kReportHeader << '\n';
    std::ostringstream line;
    line << std::setprecision(10);
    for (const auto& r : rows) {
        line.str("");
        line << r.check << ',' << r.lhs.real() << ',' << r.lhs.imag() << ',' << r.rhs.real() << ',' << r.rhs.imag() << ','
             << std::setprecision(4) << std::scientific << r.gap << ',' << r.tol << std::defaultfloat
             << std::setprecision(10) << ',' << (r.pass ? "pass" : "fail") << '\n';
        out << line.str();
    }
}

}  // namespace ridgelab
