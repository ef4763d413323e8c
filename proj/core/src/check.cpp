#include "annspec/check.hpp"

#include <cstdio>

namespace annspec {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CheckReport::add_param(const std::string& key, double value) {
    params.emplace_back(key, format_full(value));
}

} // namespace annspec
