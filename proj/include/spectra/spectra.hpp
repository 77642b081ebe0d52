#pragma once

#include "spectra/curves.hpp"
#include "spectra/groebner/double_plane.hpp"
#include "spectra/groebner/gin.hpp"
#include "spectra/groebner/groebner.hpp"
#include "spectra/groebner/points.hpp"
#include "spectra/monad.hpp"
#include "spectra/report.hpp"
#include "spectra/seqcalc.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/version.hpp"
