#pragma once

#include "satgraph/canonical.hpp"
#include "satgraph/construct.hpp"
#include "satgraph/embed.hpp"
#include "satgraph/errors.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/graph6.hpp"
#include "satgraph/hunt.hpp"
#include "satgraph/parallel.hpp"
#include "satgraph/pattern.hpp"
#include "satgraph/saturate.hpp"
#include "satgraph/search.hpp"
#include "satgraph/version.hpp"
#include "satgraph/vertex_set.hpp"
