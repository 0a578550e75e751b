#ifndef ESLAB_ESLAB_HPP
#define ESLAB_ESLAB_HPP

#include "eslab/bits.hpp"
#include "eslab/domain.hpp"
#include "eslab/error.hpp"
#include "eslab/generate.hpp"
#include "eslab/graph.hpp"
#include "eslab/io.hpp"
#include "eslab/labelling.hpp"
#include "eslab/structure.hpp"
#include "eslab/theory.hpp"

#endif
