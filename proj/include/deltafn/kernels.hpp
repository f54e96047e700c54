#pragma once

// Data-parallel inner loops with a scalar reference implementation and SIMD
// variants chosen at runtime from the host CPU features.

#include <string_view>

namespace deltafn::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

/// Best instruction set supported by this binary and the running CPU.
Isa detected_isa();

/// Instruction set currently used by the dispatched entry points.
Isa active_isa();

/// Override dispatch (tests and benchmarking). Requests for an instruction
/// set the CPU lacks fall back to the scalar kernel. Returns the ISA in use.
Isa set_active_isa(Isa isa);

/// sum_{k=0}^{count-1} (a+k)^(-s) for integer s >= 1, a > 0. Terms are
/// accumulated from k = count-1 downwards.
double inverse_power_sum(double a, int count, int s);

double inverse_power_sum_scalar(double a, int count, int s);
double inverse_power_sum_avx2(double a, int count, int s);
double inverse_power_sum_neon(double a, int count, int s);

}  // namespace deltafn::kernels
