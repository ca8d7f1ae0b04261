#ifndef SZILARD_CONSTANTS_HPP
#define SZILARD_CONSTANTS_HPP

namespace szilard::codata {

// 2019 SI exact defining constants.
inline constexpr double planck_h   = 6.62607015e-34;  // J s
inline constexpr double boltzmann_k = 1.380649e-23;   // J/K

} // namespace szilard::codata

#endif
