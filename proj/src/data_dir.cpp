#include "regseq/data_dir.hpp"

#include <cstdlib>

#ifndef REGSEQ_DATA_DIR
#define REGSEQ_DATA_DIR "data"
#endif

namespace regseq {

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("REGSEQ_DATA_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(REGSEQ_DATA_DIR);
}

std::filesystem::path data_file(std::string_view name) {
    return data_dir() / name;
}

}  // namespace regseq
