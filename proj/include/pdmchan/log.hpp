#pragma once

// Minimal leveled logging. Level comes from the PDMCHAN_LOG environment
// variable (error|warn|info|debug); default is warn. The sink is replaceable
// so tests can capture messages.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>

namespace pdmchan::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

inline const char* level_name(Level lv) {
  switch (lv) {
    case Level::error: return "error";
    case Level::warn: return "warn";
    case Level::info: return "info";
    case Level::debug: return "debug";
  }
  return "?";
}

inline Level threshold_from_env() {
  const char* env = std::getenv("PDMCHAN_LOG");
  if (env == nullptr) return Level::warn;
  std::string s(env);
  if (s == "error") return Level::error;
  if (s == "warn") return Level::warn;
  if (s == "info") return Level::info;
  if (s == "debug") return Level::debug;
  return Level::warn;
}

inline Level& threshold() {
  static Level lv = threshold_from_env();
  return lv;
}

using Sink = std::function<void(Level, const std::string&)>;

inline Sink& sink() {
  static Sink s = [](Level lv, const std::string& msg) {
    std::fprintf(stderr, "pdmchan: [%s] %s\n", level_name(lv), msg.c_str());
  };
  return s;
}

inline void set_sink(Sink s) { sink() = std::move(s); }

inline void emit(Level lv, const std::string& msg) {
  if (static_cast<int>(lv) <= static_cast<int>(threshold())) sink()(lv, msg);
}

inline void error(const std::string& msg) { emit(Level::error, msg); }
inline void warn(const std::string& msg) { emit(Level::warn, msg); }
inline void info(const std::string& msg) { emit(Level::info, msg); }
inline void debug(const std::string& msg) { emit(Level::debug, msg); }

}  // namespace pdmchan::log
