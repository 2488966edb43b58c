#pragma once

/// Everything: finite sets, functors, coends, profunctors, tensors and
/// monoids, the two adjunctions, the equivalence constructions and the
/// verification suites.

#include "adjunction.hpp"
#include "category.hpp"
#include "coend.hpp"
#include "controls.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "finset.hpp"
#include "finset_laws.hpp"
#include "functor.hpp"
#include "library.hpp"
#include "monoidal.hpp"
#include "profunctor.hpp"
#include "report.hpp"
#include "suites.hpp"
