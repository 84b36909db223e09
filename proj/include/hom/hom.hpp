#ifndef HOM_HOM_HPP
#define HOM_HOM_HPP

#include "hom/errors.hpp"
#include "hom/evolution.hpp"
#include "hom/hom_analytics.hpp"
#include "hom/lattice_scattering.hpp"
#include "hom/observables.hpp"
#include "hom/state_prep.hpp"

#endif  // HOM_HOM_HPP
