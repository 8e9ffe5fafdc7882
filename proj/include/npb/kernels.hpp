#pragma once

// Index-table kernels shared by the exhaustive checks.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The active variant is chosen once at startup from CPUID; setting
// NPB_FORCE_SCALAR=1 in the environment pins the scalar path. Both variants
// are required to produce identical results (see tests/test_kernels.cpp).

#include <cstddef>
#include <span>
#include <string_view>

#include "npb/error.hpp"

namespace npb::kernels {

enum class Isa { Scalar, Avx2 };

/// out[i] = lookup[idx[i]]. Equivalently the composite of two index maps,
/// "apply idx then lookup". All idx values must be valid positions in lookup.
using GatherFn = void (*)(std::span<const Index> lookup, std::span<const Index> idx,
                          std::span<Index> out);

/// Position of the first i with a[i] != b[i], or a.size() when equal.
using MismatchFn = std::size_t (*)(std::span<const Index> a, std::span<const Index> b);

/// Position of the first i with lookup[idx[i]] != expect[i], or idx.size().
/// Fused gather+compare used by the associativity scan.
using GatherMismatchFn = std::size_t (*)(std::span<const Index> lookup,
                                         std::span<const Index> idx,
                                         std::span<const Index> expect);

/// Position of the first i with a[i] != i, or a.size().
using IdentityMismatchFn = std::size_t (*)(std::span<const Index> a);

struct KernelTable {
  Isa isa;
  GatherFn gather;
  MismatchFn mismatch;
  GatherMismatchFn gather_mismatch;
  IdentityMismatchFn identity_mismatch;
};

namespace scalar {
void gather(std::span<const Index> lookup, std::span<const Index> idx, std::span<Index> out);
std::size_t mismatch(std::span<const Index> a, std::span<const Index> b);
std::size_t gather_mismatch(std::span<const Index> lookup, std::span<const Index> idx,
                            std::span<const Index> expect);
std::size_t identity_mismatch(std::span<const Index> a);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define NPB_HAVE_AVX2_KERNELS 1
namespace avx2 {
void gather(std::span<const Index> lookup, std::span<const Index> idx, std::span<Index> out);
std::size_t mismatch(std::span<const Index> a, std::span<const Index> b);
std::size_t gather_mismatch(std::span<const Index> lookup, std::span<const Index> idx,
                            std::span<const Index> expect);
std::size_t identity_mismatch(std::span<const Index> a);
}  // namespace avx2
#endif

const KernelTable& scalar_table();

/// True when the CPU can run the AVX2 table.
bool avx2_available();

/// The table selected for this process.
const KernelTable& active();

std::string_view isa_name(Isa isa);

inline void gather(std::span<const Index> lookup, std::span<const Index> idx,
                   std::span<Index> out) {
  active().gather(lookup, idx, out);
}
inline bool equal(std::span<const Index> a, std::span<const Index> b) {
  return a.size() == b.size() && active().mismatch(a, b) == a.size();
}
inline bool is_identity(std::span<const Index> a) {
  return active().identity_mismatch(a) == a.size();
}

}  // namespace npb::kernels
