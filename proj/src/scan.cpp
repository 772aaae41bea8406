#include "zerosum/scan.hpp"

namespace zerosum {

int hardware_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace zerosum
