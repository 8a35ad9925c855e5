// Copyright (c) 2026 The Bychain developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "bychain/util/log.hpp"

#include <atomic>
#include <iostream>

namespace bychain {

static std::atomic<bool> g_log_enabled{true};

void log_warn(std::string_view msg) {
    if (g_log_enabled.load(std::memory_order_relaxed))
        std::cerr << "[bychain] warning: " << msg << "\n";
}

void set_log_enabled(bool enabled) {
    g_log_enabled.store(enabled, std::memory_order_relaxed);
}

} // namespace bychain
