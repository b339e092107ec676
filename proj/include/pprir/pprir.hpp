#pragma once

#include "pprir/audit.hpp"
#include "pprir/claim.hpp"
#include "pprir/element_set.hpp"
#include "pprir/finite_ring.hpp"
#include "pprir/homomorphism.hpp"
#include "pprir/ideal.hpp"
#include "pprir/quotient.hpp"
#include "pprir/ring_io.hpp"
#include "pprir/zmodel.hpp"
