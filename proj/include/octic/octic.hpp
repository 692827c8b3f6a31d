#ifndef OCTIC_OCTIC_HPP
#define OCTIC_OCTIC_HPP

#include "octic/condition.hpp"
#include "octic/conjugates.hpp"
#include "octic/enumerator.hpp"
#include "octic/field_scan.hpp"
#include "octic/generator_solver.hpp"
#include "octic/lll.hpp"
#include "octic/mp_real.hpp"
#include "octic/pipeline.hpp"
#include "octic/poly.hpp"
#include "octic/quad_int.hpp"
#include "octic/reducer.hpp"
#include "octic/thue_setup.hpp"

#endif  // OCTIC_OCTIC_HPP
