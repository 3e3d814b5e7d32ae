#pragma once

#include "homcoh/brackets.hpp"
#include "homcoh/cochain.hpp"
#include "homcoh/cochain_complex.hpp"
#include "homcoh/deformation.hpp"
#include "homcoh/errors.hpp"
#include "homcoh/hom_algebra.hpp"
#include "homcoh/linalg.hpp"
#include "homcoh/scalar.hpp"
