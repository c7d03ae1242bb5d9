#include <cstdlib>
#include <cstring>

#include "mathieu/kernels.hpp"

namespace mathieu::kernels {

namespace {

const Kernels& select() {
  const char* env = std::getenv("MATHIEU_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
  bool want_simd = (env == nullptr) || std::strcmp(env, "auto") == 0 ||
                   std::strcmp(env, "avx2") == 0;
  if (want_simd && avx2_available()) return avx2_kernels();
#endif
  return scalar_kernels();
}

}  // namespace

const Kernels& active() {
  static const Kernels& k = select();
  return k;
}

}  // namespace mathieu::kernels
