#include "dfs/log.hpp"

#include <cstdlib>
#include <iostream>

namespace dfs::log {
namespace {

Level parse_level() {
    const char* env = std::getenv("DFS_LOG");
    if (env == nullptr) return Level::Warn;
    const std::string value(env);
    if (value == "error") return Level::Error;
    if (value == "warn") return Level::Warn;
    if (value == "info") return Level::Info;
    if (value == "debug") return Level::Debug;
    return Level::Warn;
}

const char* tag(Level level) {
    switch (level) {
        case Level::Error: return "error";
        case Level::Warn: return "warn";
        case Level::Info: return "info";
        case Level::Debug: return "debug";
    }
    return "?";
}

}  // namespace

Level threshold() {
    static const Level cached = parse_level();
    return cached;
}

void emit(Level level, const std::string& message) {
    if (static_cast<int>(level) > static_cast<int>(threshold())) return;
    std::cerr << "[dfs:" << tag(level) << "] " << message << '\n';
}

}  // namespace dfs::log
