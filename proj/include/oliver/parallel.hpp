#ifndef OLIVER_PARALLEL_HPP
#define OLIVER_PARALLEL_HPP

namespace oliver::parallel {

/// Worker count for OpenMP kernels. OLIVER_EXCLUDE_THREADS, when set to a
/// positive integer, caps it; otherwise the OpenMP default applies.
int thread_count();

/// True when compiled with OpenMP and thread_count() > 1.
bool enabled();

}  // namespace oliver::parallel

#endif
