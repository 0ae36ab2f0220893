#include "falsetheta/parallel.hpp"

#include <cstdlib>
#include <string>

namespace falsetheta {

int thread_budget() {
    int budget = static_cast<int>(std::thread::hardware_concurrency());
    if (budget < 1) budget = 1;
    if (const char* env = std::getenv("FALSETHETA_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1 && cap < budget) budget = cap;
        } catch (const std::exception&) {
            // unparsable cap is ignored
        }
    }
    return budget;
}

}  // namespace falsetheta
