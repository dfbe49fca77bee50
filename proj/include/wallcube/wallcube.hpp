#ifndef WALLCUBE_WALLCUBE_HPP
#define WALLCUBE_WALLCUBE_HPP

#include <wallcube/core.hpp>
#include <wallcube/space_model.hpp>
#include <wallcube/divisions.hpp>
#include <wallcube/wallspace.hpp>
#include <wallcube/dual_cubes.hpp>
#include <wallcube/trees.hpp>
#include <wallcube/cutpoint_tree.hpp>
#include <wallcube/input.hpp>
#include <wallcube/export.hpp>
#include <wallcube/commands.hpp>

#endif  // WALLCUBE_WALLCUBE_HPP
