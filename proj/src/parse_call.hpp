#pragma once

#include <string>
#include <vector>

#include "ridgelab/source.hpp"

namespace ridgelab::detail {

struct CatalogCall {
    std::string name;
    std::vector<double> args;
};

// Parses "name" or "name(a, b, ...)" with numeric arguments.
CatalogCall parse_call(const std::string& text);

// Throws CatalogError unless the argument count lies in [lo, hi].
void expect_args(const CatalogCall& call, std::size_t lo, std::size_t hi);

}  // namespace ridgelab::detail
