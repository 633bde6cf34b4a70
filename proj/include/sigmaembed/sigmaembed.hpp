#ifndef SIGMAEMBED_SIGMAEMBED_HPP
#define SIGMAEMBED_SIGMAEMBED_HPP

#include "perm.hpp"
#include "bsgs.hpp"
#include "group.hpp"
#include "subgroup.hpp"
#include "lattice.hpp"
#include "sigma.hpp"
#include "series.hpp"
#include "embeddings.hpp"
#include "corpus.hpp"
#include "harness.hpp"

#endif
