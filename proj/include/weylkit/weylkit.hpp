#pragma once

#include "weylkit/characters.hpp"
#include "weylkit/charge.hpp"
#include "weylkit/golden.hpp"
#include "weylkit/qpoly.hpp"
#include "weylkit/render.hpp"
#include "weylkit/schur.hpp"
#include "weylkit/sigma.hpp"
#include "weylkit/suites.hpp"
#include "weylkit/transition.hpp"
#include "weylkit/weight.hpp"
