#pragma once

// Thread control for the OpenMP kernels.

namespace hgs {

/// Every parallel kernel keeps a serial reference; tests compare the two.
enum class Exec { serial, parallel };

/// Threads used by parallel kernels. Defaults to HGS_THREADS when set, else
/// the OpenMP default.
int thread_count();
/// n <= 0 restores the default.
void set_thread_count(int n);

}  // namespace hgs
