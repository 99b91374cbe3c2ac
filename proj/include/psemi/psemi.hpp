#ifndef PSEMI_PSEMI_HPP
#define PSEMI_PSEMI_HPP

#include "psemi/automaton.hpp"
#include "psemi/cone.hpp"
#include "psemi/csemigroup.hpp"
#include "psemi/enumeration.hpp"
#include "psemi/errors.hpp"
#include "psemi/job.hpp"
#include "psemi/order.hpp"
#include "psemi/pcheck.hpp"
#include "psemi/point.hpp"
#include "psemi/serialize.hpp"

#endif
