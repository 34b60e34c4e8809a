#ifndef LOWTEMP_LOWTEMP_HPP
#define LOWTEMP_LOWTEMP_HPP

// Exact low-temperature series of the 2D zero-field square-lattice Ising model.

#include <lowtemp/bell.hpp>
#include <lowtemp/bfile.hpp>
#include <lowtemp/distribution.hpp>
#include <lowtemp/free_energy.hpp>
#include <lowtemp/partition.hpp>
#include <lowtemp/rational.hpp>
#include <lowtemp/selftest.hpp>
#include <lowtemp/series.hpp>
#include <lowtemp/vpolynomial.hpp>

#endif
