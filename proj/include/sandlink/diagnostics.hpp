// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

#include <functional>
#include <string_view>

namespace sandlink::diag {

using WarningHandler = std::function<void(std::string_view)>;

// Replaces the warning sink. An empty handler restores the default, which
// writes "warning: ..." to stderr. The handler may be invoked concurrently;
// calls are serialized by the library.
void set_warning_handler(WarningHandler handler);

void warn(std::string_view message);

} // namespace sandlink::diag
