#include "egoten/kernels.hpp"

#include <cstdlib>
#include <string>

#include "egoten/common.hpp"

namespace egoten::kernels {

extern const KernelTable kScalarTable;   // kernels_scalar.cpp
const KernelTable* avx2_table();         // kernels_avx2.cpp, nullptr if not built

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct Dispatch {
    const KernelTable* active = &kScalarTable;
    Isa isa = Isa::scalar;

    Dispatch() {
        bool want_avx2 = avx2_table() != nullptr && cpu_has_avx2();
        if (const char* env = std::getenv("EGOTEN_KERNELS")) {
            const std::string v(env);
            if (v == "scalar") want_avx2 = false;
            else if (v == "avx2" && (avx2_table() == nullptr || !cpu_has_avx2()))
                throw Error("EGOTEN_KERNELS=avx2 but AVX2 is unavailable on this machine");
            else if (v != "avx2" && v != "scalar")
                throw Error("EGOTEN_KERNELS must be 'scalar' or 'avx2', got '" + v + "'");
        }
        if (want_avx2) {
            active = avx2_table();
            isa = Isa::avx2;
        }
    }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
    if (isa == Isa::scalar) return true;
    return avx2_table() != nullptr && cpu_has_avx2();
}

const KernelTable& table() { return *dispatch().active; }

Isa active_isa() { return dispatch().isa; }

void force_isa(Isa isa) {
    if (!isa_supported(isa))
        throw Error(std::string("kernel ISA '") + isa_name(isa) + "' is unavailable here");
    dispatch().active = (isa == Isa::avx2) ? avx2_table() : &kScalarTable;
    dispatch().isa = isa;
}

const KernelTable& table_for(Isa isa) {
    if (!isa_supported(isa))
        throw Error(std::string("kernel ISA '") + isa_name(isa) + "' is unavailable here");
    return isa == Isa::avx2 ? *avx2_table() : kScalarTable;
}

}  // namespace egoten::kernels
