#pragma once

#include "ckron/cayley.hpp"
#include "ckron/cmatrix.hpp"
#include "ckron/errors.hpp"
#include "ckron/kron_analogue.hpp"
#include "ckron/linalg.hpp"
#include "ckron/matrix_io.hpp"
#include "ckron/predicates.hpp"
#include "ckron/separability.hpp"
#include "ckron/tolerances.hpp"
