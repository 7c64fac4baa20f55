#include "freud/coeffs.hpp"

namespace freud {

template MomentTableT<double> compute_moments<double>(int);
template MomentTableT<ext_real> compute_moments<ext_real>(int);

template CoeffTableT<double> solve_string_system<double>(int, double,
                                                         StringOptions);
template CoeffTableT<ext_real> solve_string_system<ext_real>(int, ext_real,
                                                             StringOptions);

template CoeffTableT<double> stieltjes_oracle<double>(int, int);
template CoeffTableT<ext_real> stieltjes_oracle<ext_real>(int, int);

template NormSqValue norm_sq<double>(const CoeffTableT<double>&, int);
template NormSqValue norm_sq<ext_real>(const CoeffTableT<ext_real>&, int);

}  // namespace freud
