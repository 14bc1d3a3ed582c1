#include "titsforge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace titsforge {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TITS_FORGE_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
            // fall through to hardware default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace titsforge
