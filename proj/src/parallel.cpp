#include "schwlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace schwlab {

unsigned worker_count() {
    unsigned cap = 0;
    if (const char* env = std::getenv("SCHWARZIAN_LAB_THREADS")) {
        try {
            cap = static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            cap = 0;
        }
    }
    if (cap == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        cap = hw == 0 ? 1 : hw;
    }
    return cap;
}

} // namespace schwlab
