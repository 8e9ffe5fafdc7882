#include <cstdlib>
#include <cstring>

#include "npb/kernels.hpp"

namespace npb::kernels {

namespace scalar {

void gather(std::span<const Index> lookup, std::span<const Index> idx, std::span<Index> out) {
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = lookup[static_cast<std::size_t>(idx[i])];
}

std::size_t mismatch(std::span<const Index> a, std::span<const Index> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return i;
  return a.size();
}

std::size_t gather_mismatch(std::span<const Index> lookup, std::span<const Index> idx,
                            std::span<const Index> expect) {
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (lookup[static_cast<std::size_t>(idx[i])] != expect[i]) return i;
  return idx.size();
}

std::size_t identity_mismatch(std::span<const Index> a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<Index>(i)) return i;
  return a.size();
}

}  // namespace scalar

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, &scalar::gather, &scalar::mismatch,
                                 &scalar::gather_mismatch, &scalar::identity_mismatch};
  return table;
}

bool avx2_available() {
#if defined(NPB_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const KernelTable& select() {
  const char* force = std::getenv("NPB_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0) return scalar_table();
#if defined(NPB_HAVE_AVX2_KERNELS)
  if (avx2_available()) {
    static const KernelTable table{Isa::Avx2, &avx2::gather, &avx2::mismatch,
                                   &avx2::gather_mismatch, &avx2::identity_mismatch};
    return table;
  }
#endif
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

}  // namespace npb::kernels
