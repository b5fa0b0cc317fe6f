#pragma once

// Umbrella header.

#include "cayley.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "layout.hpp"
#include "profile.hpp"
#include "separation.hpp"
#include "treegraded.hpp"
#include "treewidth.hpp"
