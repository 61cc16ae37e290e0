// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#include "sandlink/diagnostics.hpp"

#include <cstdio>
#include <mutex>
#include <string>
#include <utility>

namespace sandlink::diag {

namespace {

std::mutex g_mutex;
WarningHandler g_handler; // empty = default stderr sink

void default_sink(std::string_view message)
{
    std::string line = "warning: ";
    line.append(message);
    line.push_back('\n');
    std::fwrite(line.data(), 1, line.size(), stderr);
}

} // namespace

void set_warning_handler(WarningHandler handler)
{
    std::lock_guard<std::mutex> lock(g_mutex);
    g_handler = std::move(handler);
}

void warn(std::string_view message)
{
    std::lock_guard<std::mutex> lock(g_mutex);
    if (g_handler) {
        g_handler(message);
    } else {
        default_sink(message);
    }
}

} // namespace sandlink::diag
