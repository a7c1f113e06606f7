#pragma once

#include "unimod/catalog.hpp"
#include "unimod/enumeration.hpp"
#include "unimod/error.hpp"
#include "unimod/exact_linalg.hpp"
#include "unimod/lattice.hpp"
#include "unimod/lattice_io.hpp"
#include "unimod/modular.hpp"
#include "unimod/qseries.hpp"
#include "unimod/recognition.hpp"
#include "unimod/root_lattices.hpp"
#include "unimod/theta.hpp"
#include "unimod/verify.hpp"
