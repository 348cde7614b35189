#pragma once

#include <cstddef>
#include <functional>

namespace hankel_spectra {

// Thread cap from HANKEL_SPECTRA_THREADS. 0 or unset means sequential.
int thread_cap();

// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
// using up to thread_cap() worker threads. Each index is handled exactly
// once, so writers to disjoint rows stay deterministic.
void parallel_for_chunks(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hankel_spectra
