// Copyright (c) 2026 The Bychain developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef BYCHAIN_UTIL_LOG_HPP
#define BYCHAIN_UTIL_LOG_HPP

#include <string_view>

namespace bychain {

// Diagnostics go to stderr; silenced during deterministic report runs.
void log_warn(std::string_view msg);
void set_log_enabled(bool enabled);

} // namespace bychain

#endif // BYCHAIN_UTIL_LOG_HPP
