#include "coopnet/errors.hpp"

#include <cstdio>

namespace coopnet::diag {

namespace {
thread_local std::vector<std::string> t_warnings;
bool g_to_stderr = false;
} // namespace

void emit_warning(const std::string& msg) {
    t_warnings.push_back(msg);
    if (g_to_stderr)
        std::fprintf(stderr, "warning: %s\n", msg.c_str());
}

std::vector<std::string> drain_warnings() {
    std::vector<std::string> out;
    out.swap(t_warnings);
    return out;
}

std::size_t warning_count() {
    return t_warnings.size();
}

void set_warnings_to_stderr(bool enabled) {
    g_to_stderr = enabled;
}

} // namespace coopnet::diag
