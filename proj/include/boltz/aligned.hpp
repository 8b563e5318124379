#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <vector>

#include <fftw3.h>

namespace boltz {

/// Allocator that hands out FFTW-aligned storage so every buffer can be fed to
/// the same precomputed plans through the new-array execute interface.
template <class T>
struct FftwAllocator {
  using value_type = T;

  FftwAllocator() noexcept = default;
  template <class U>
  FftwAllocator(const FftwAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    if (n == 0) return nullptr;
    void* p = fftw_malloc(n * sizeof(T));
    if (p == nullptr) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) noexcept { fftw_free(p); }

  template <class U>
  bool operator==(const FftwAllocator<U>&) const noexcept {
    return true;
  }
};

using Complex = std::complex<double>;
using RealArray = std::vector<double, FftwAllocator<double>>;
using ComplexArray = std::vector<Complex, FftwAllocator<Complex>>;

}  // namespace boltz
