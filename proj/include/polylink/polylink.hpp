#pragma once

#include "polylink/atrails.hpp"
#include "polylink/belts.hpp"
#include "polylink/catalog.hpp"
#include "polylink/covers.hpp"
#include "polylink/embedded_graph.hpp"
#include "polylink/error.hpp"
#include "polylink/gf2.hpp"
#include "polylink/hamiltonian.hpp"
#include "polylink/io.hpp"
#include "polylink/links.hpp"
#include "polylink/polytopes.hpp"
