#pragma once

#define PDMCHAN_VERSION_MAJOR 0
#define PDMCHAN_VERSION_MINOR 1
#define PDMCHAN_VERSION_PATCH 0

namespace pdmchan {

inline constexpr const char* version_string = "0.1.0";

}  // namespace pdmchan
