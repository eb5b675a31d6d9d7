#include "wavelcs/tables.hpp"

#include <string>

#include "wavelcs/errors.hpp"

namespace wavelcs {

void check_capacity(std::size_t m, std::size_t n, std::size_t budget) {
    // (M+1)(N+1) Length cells plus M*N Arrow bytes, computed in 128 bits so
    // absurd requests fail cleanly instead of wrapping.
    const auto wide_m = static_cast<unsigned __int128>(m);
    const auto wide_n = static_cast<unsigned __int128>(n);
    const unsigned __int128 bytes =
        (wide_m + 1) * (wide_n + 1) * sizeof(Length) + wide_m * wide_n * sizeof(Arrow);
    if (bytes > budget) {
        const std::string need =
            bytes <= ~0ULL ? std::to_string(static_cast<unsigned long long>(bytes))
                           : "more than 2^64";
        throw CapacityError("tables for M=" + std::to_string(m) + ", N=" + std::to_string(n) +
                            " need " + need + " bytes, over the " + std::to_string(budget) +
                            "-byte budget");
    }
}

}  // namespace wavelcs
