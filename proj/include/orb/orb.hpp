#ifndef ORB_ORB_HPP_
#define ORB_ORB_HPP_

// Umbrella header.

#include "orb/abelian.hpp"
#include "orb/action.hpp"
#include "orb/census.hpp"
#include "orb/classify.hpp"
#include "orb/cohomology.hpp"
#include "orb/cover.hpp"
#include "orb/cup.hpp"
#include "orb/f2.hpp"
#include "orb/fox.hpp"
#include "orb/graph_of_groups.hpp"
#include "orb/int_linalg.hpp"
#include "orb/module.hpp"
#include "orb/presentation.hpp"
#include "orb/rational.hpp"
#include "orb/restriction.hpp"
#include "orb/signature.hpp"
#include "orb/validate.hpp"

#endif  // ORB_ORB_HPP_
