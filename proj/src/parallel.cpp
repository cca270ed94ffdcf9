#include "gapless/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gapless {

int job_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1)
        hw = 1;
    if (const char* env = std::getenv("GAPLESS_HECKE_JOBS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1)
                return cap < hw ? cap : hw;
        } catch (...) {
        }
    }
    return hw;
}

}  // namespace gapless
