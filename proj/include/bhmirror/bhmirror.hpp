#pragma once

#include "bhmirror/errors.hpp"
#include "bhmirror/rational.hpp"
#include "bhmirror/poly.hpp"
#include "bhmirror/symmetry.hpp"
#include "bhmirror/milnor.hpp"
#include "bhmirror/statespace.hpp"
#include "bhmirror/mirror.hpp"
#include "bhmirror/geometry.hpp"
#include "bhmirror/catalog.hpp"
#include "bhmirror/checks.hpp"
