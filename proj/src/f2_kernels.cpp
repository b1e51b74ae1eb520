#include "spinh/f2_kernels.hpp"
#include "spinh/error.hpp"

#include <atomic>
#include <bit>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SPINH_HAVE_AVX2_PATH 1
#endif

#if defined(__ARM_NEON)
#include <arm_neon.h>
#define SPINH_HAVE_NEON_PATH 1
#endif

namespace spinh::f2 {

namespace {

void xor_scalar(Word* dst, const Word* src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] ^= src[i];
}

bool zero_scalar(const Word* row, std::size_t n)
{
    Word acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc |= row[i];
    return acc == 0;
}

std::size_t popcount_scalar(const Word* row, std::size_t n)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += std::popcount(row[i]);
    return c;
}

const Kernels scalar_table{KernelKind::scalar, "scalar", xor_scalar, zero_scalar, popcount_scalar};

#ifdef SPINH_HAVE_AVX2_PATH

__attribute__((target("avx2"))) void xor_avx2(Word* dst, const Word* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

__attribute__((target("avx2"))) bool zero_avx2(const Word* row, std::size_t n)
{
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i)));
    Word tail = 0;
    for (; i < n; ++i)
        tail |= row[i];
    return _mm256_testz_si256(acc, acc) && tail == 0;
}

__attribute__((target("avx2,popcnt"))) std::size_t popcount_avx2(const Word* row, std::size_t n)
{
    // no vector popcount in plain AVX2; hardware popcnt per word
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::size_t>(_mm_popcnt_u64(row[i]));
    return c;
}

const Kernels avx2_table{KernelKind::avx2, "avx2", xor_avx2, zero_avx2, popcount_avx2};

bool cpu_has_avx2()
{
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
}

#endif

#ifdef SPINH_HAVE_NEON_PATH

void xor_neon(Word* dst, const Word* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

bool zero_neon(const Word* row, std::size_t n)
{
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= n; i += 2)
        acc = vorrq_u64(acc, vld1q_u64(row + i));
    Word tail = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
    for (; i < n; ++i)
        tail |= row[i];
    return tail == 0;
}

std::size_t popcount_neon(const Word* row, std::size_t n)
{
    std::size_t i = 0, c = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(row + i)));
        c += vaddvq_u8(bytes);
    }
    for (; i < n; ++i)
        c += std::popcount(row[i]);
    return c;
}

const Kernels neon_table{KernelKind::neon, "neon", xor_neon, zero_neon, popcount_neon};

#endif

const Kernels* detect()
{
#ifdef SPINH_HAVE_AVX2_PATH
    if (cpu_has_avx2())
        return &avx2_table;
#endif
#ifdef SPINH_HAVE_NEON_PATH
    return &neon_table;
#endif
    return &scalar_table;
}

std::atomic<const Kernels*> override_table{nullptr};

} // namespace

const Kernels& scalar_kernels() { return scalar_table; }

const Kernels* kernels_for(KernelKind k)
{
    switch (k) {
    case KernelKind::scalar:
        return &scalar_table;
    case KernelKind::avx2:
#ifdef SPINH_HAVE_AVX2_PATH
        if (cpu_has_avx2())
            return &avx2_table;
#endif
        return nullptr;
    case KernelKind::neon:
#ifdef SPINH_HAVE_NEON_PATH
        return &neon_table;
#endif
        return nullptr;
    }
    return nullptr;
}

bool kernel_available(KernelKind k) { return kernels_for(k) != nullptr; }

const Kernels& active_kernels()
{
    if (const Kernels* o = override_table.load(std::memory_order_acquire))
        return *o;
    static const Kernels* best = detect();
    return *best;
}

void set_kernel_override(std::optional<KernelKind> k)
{
    if (!k) {
        override_table.store(nullptr, std::memory_order_release);
        return;
    }
    const Kernels* t = kernels_for(*k);
    if (!t)
        throw DomainError(Errc::invalid_argument, std::string("kernel variant not available: ") + kernel_name(*k));
    override_table.store(t, std::memory_order_release);
}

const char* kernel_name(KernelKind k)
{
    switch (k) {
    case KernelKind::scalar: return "scalar";
    case KernelKind::avx2: return "avx2";
    case KernelKind::neon: return "neon";
    }
    return "?";
}

} // namespace spinh::f2
