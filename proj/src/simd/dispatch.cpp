#include <cstdlib>
#include <string>

#include "dwtsteg/error.hpp"
#include "dwtsteg/simd/kernels.hpp"

namespace dwtsteg::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Kernels& select_from_environment() {
  const char* forced = std::getenv("DWTSTEG_ISA");
  if (forced != nullptr) {
    const std::string name(forced);
    if (name == "scalar") return scalar_kernels();
    if (name == "avx2" && avx2_kernels() != nullptr && cpu_has_avx2()) return *avx2_kernels();
  }
  if (avx2_kernels() != nullptr && cpu_has_avx2()) return *avx2_kernels();
  return scalar_kernels();
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (avx2_kernels() != nullptr && cpu_has_avx2()) out.push_back(Isa::Avx2);
  return out;
}

const Kernels& kernels_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return scalar_kernels();
    case Isa::Avx2:
      if (avx2_kernels() != nullptr && cpu_has_avx2()) return *avx2_kernels();
      throw InvalidArgument("AVX2 kernels are not available on this machine");
  }
  throw InvalidArgument("unknown ISA");
}

const Kernels& active_kernels() {
  static const Kernels& chosen = select_from_environment();
  return chosen;
}

}  // namespace dwtsteg::simd
