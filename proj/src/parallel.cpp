#include "osgoodlab/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace osgoodlab {

int thread_cap() {
    static const int cap = [] {
#ifdef _OPENMP
        int n = omp_get_max_threads();
#else
        int n = 1;
#endif
        if (const char* env = std::getenv("OSGOODLAB_THREADS")) {
            try {
                const int requested = std::stoi(env);
                if (requested >= 1 && requested < n) n = requested;
            } catch (...) {
                // unparsable value: keep the runtime default
            }
        }
        return n < 1 ? 1 : n;
    }();
    return cap;
}

void apply_thread_cap() {
#ifdef _OPENMP
    omp_set_num_threads(thread_cap());
#endif
}

}  // namespace osgoodlab
