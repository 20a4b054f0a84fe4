#pragma once

#include <string>

namespace dfs::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Threshold comes from the DFS_LOG environment variable
// {error, warn, info, debug}; default is warn. Messages go to stderr.
Level threshold();

void emit(Level level, const std::string& message);

inline void error(const std::string& m) { emit(Level::Error, m); }
inline void warn(const std::string& m) { emit(Level::Warn, m); }
inline void info(const std::string& m) { emit(Level::Info, m); }
inline void debug(const std::string& m) { emit(Level::Debug, m); }

}  // namespace dfs::log
