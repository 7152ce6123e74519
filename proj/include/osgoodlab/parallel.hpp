#pragma once

namespace osgoodlab {

/// Execution policy for the data-parallel kernels. Serial is the
/// reference path; Parallel runs the same loop under OpenMP.
enum class Exec { Serial, Parallel };

/// Thread cap: min(OSGOODLAB_THREADS, hardware). Reads the environment
/// once. Returns at least 1.
int thread_cap();

/// Applies thread_cap() to the OpenMP runtime. Called by entry points.
void apply_thread_cap();

}  // namespace osgoodlab
