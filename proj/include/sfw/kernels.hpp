// kernels.hpp
// Word-level bitmap kernels behind the dense set algebra. Bit i of word w is
// element 64*w + i (little-endian bit order). Every kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant; the active table
// is picked once at startup from CPUID and can be overridden for testing.
//
// Shift kernels treat the word array as one long bit vector: shifting left
// moves bits toward higher element indices. Bits shifted past nw*64 are
// dropped. Callers keep tail bits (beyond the set size) zero; the masked
// shifts used for group translation never move a live bit out of range.

#pragma once

#include <cstddef>
#include <cstdint>

namespace sfw::kern {

struct Ops {
    void (*or_into)(uint64_t* dst, const uint64_t* src, size_t nw);
    void (*and_into)(uint64_t* dst, const uint64_t* src, size_t nw);
    void (*andnot_into)(uint64_t* dst, const uint64_t* src, size_t nw);
    void (*xor_into)(uint64_t* dst, const uint64_t* src, size_t nw);
    // dst |= (src & mask) << shift_bits   /   dst |= (src & mask) >> shift_bits
    void (*or_shl_masked)(uint64_t* dst, const uint64_t* src, const uint64_t* mask,
                          size_t shift_bits, size_t nw);
    void (*or_shr_masked)(uint64_t* dst, const uint64_t* src, const uint64_t* mask,
                          size_t shift_bits, size_t nw);
    uint64_t (*popcount)(const uint64_t* src, size_t nw);
    bool (*equal)(const uint64_t* a, const uint64_t* b, size_t nw);
    bool (*intersects)(const uint64_t* a, const uint64_t* b, size_t nw);
    bool (*is_zero)(const uint64_t* a, size_t nw);
    bool (*is_subset)(const uint64_t* a, const uint64_t* b, size_t nw);  // a subset of b
    const char* name;
};

const Ops& scalar_ops();

// Active table: scalar unless an AVX2 build is present and the CPU has AVX2.
const Ops& ops();

// Test/diagnostic hook: "scalar", "avx2" or "auto". Returns false if the
// requested backend is unavailable on this machine/build.
bool force_backend(const char* name);

// Name of the backend currently behind ops().
const char* active_backend();

#if defined(SFW_HAVE_AVX2_TU)
const Ops& avx2_ops();
#endif

}  // namespace sfw::kern
