// Reads a ridgelet field file and compares the value at u = (1, 0), b = 0, a = 1
// with an expected value. Usage: cli_readback <file> <expected> <tol> [dims...]
// An expected value of "-" checks only the kind and dims.
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ridgelab/field_file.hpp"

int main(int argc, char** argv) {
    using namespace ridgelab;
    if (argc < 4) {
        std::cerr << "usage: cli_readback <file> <expected> <tol> [dims...]\n";
        return 2;
    }
    const AnyField any = read_field_file(argv[1]);
    const bool dims_only = std::string(argv[2]) == "-";
    std::vector<std::size_t> dims;
    for (int i = 4; i < argc; ++i) dims.push_back(std::stoul(argv[i]));

    const auto* r = std::get_if<RidgeletField>(&any);
    if (r == nullptr) {
        std::cerr << "kind is " << field_kind(any) << ", expected ridgelet\n";
        return 1;
    }
    if (!dims.empty() && field_dims(any) != dims) {
        std::cerr << "dims do not match\n";
        return 1;
    }
    if (dims_only) return 0;
    const double expected = std::stod(argv[2]);
    const double tol = std::stod(argv[3]);
    const YGrid& y = r->grid;
    std::size_t k = y.directions().size(), i = y.b_axis().count(), j = y.scales().count();
    for (std::size_t q = 0; q < y.directions().size(); ++q)
        if (std::abs(y.directions()[q][0] - 1.0) <= 1e-12) k = q;
    for (std::size_t q = 0; q < y.b_axis().count(); ++q)
        if (std::abs(y.b_axis()[q]) <= 1e-12) i = q;
    for (std::size_t q = 0; q < y.scales().count(); ++q)
        if (std::abs(y.scales()[q] - 1.0) <= 1e-12) j = q;
    if (k == y.directions().size() || i == y.b_axis().count() || j == y.scales().count()) {
        std::cerr << "grid has no node at u = (1, 0), b = 0, a = 1\n";
        return 1;
    }
    const cplx v = r->at(k, i, j);
    std::cout.precision(10);
    std::cout << "value " << v << " expected " << expected << '\n';
    return std::abs(v - expected) <= tol ? 0 : 1;
}
