#ifndef XVA_RNG_HPP
#define XVA_RNG_HPP

#include <array>
#include <cstdint>

namespace xva {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Output depends only on (key, counter): any (seed, underlying, path, step)
// cell can be generated independently, so path order and thread count never
// change the stream.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// uniform in (0,1), exclusive of the endpoints
double uniform_from_bits(std::uint64_t bits);

// inverse standard normal CDF (Wichura's AS241, double precision)
double inverse_normal_cdf(double p);

// standard normal draw for a (seed, stream, path, step) cell
double normal_draw(std::uint64_t seed, std::uint32_t stream, std::uint64_t path,
                   std::uint32_t step);

// standard normal CDF
double normal_cdf(double x);

} // namespace xva

#endif
