#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace spinh::f2 {

using Word = std::uint64_t;

enum class KernelKind { scalar, avx2, neon };

struct Kernels {
    KernelKind kind;
    const char* name;
    // dst[i] ^= src[i]
    void (*xor_into)(Word* dst, const Word* src, std::size_t words);
    bool (*is_zero)(const Word* row, std::size_t words);
    std::size_t (*popcount)(const Word* row, std::size_t words);
};

const Kernels& scalar_kernels();
// Null when the variant is not compiled in or the CPU lacks it.
const Kernels* kernels_for(KernelKind k);
bool kernel_available(KernelKind k);

// Best available variant unless overridden.
const Kernels& active_kernels();
void set_kernel_override(std::optional<KernelKind> k);

const char* kernel_name(KernelKind k);

} // namespace spinh::f2
