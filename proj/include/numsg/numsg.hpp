#ifndef NUMSG_NUMSG_HPP
#define NUMSG_NUMSG_HPP

#include "numsg/bitmap.hpp"
#include "numsg/census.hpp"
#include "numsg/error.hpp"
#include "numsg/kunz.hpp"
#include "numsg/kunz_vector.hpp"
#include "numsg/numeric.hpp"
#include "numsg/parse.hpp"
#include "numsg/partitions.hpp"
#include "numsg/rational.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/sumset.hpp"
#include "numsg/tree.hpp"
#include "numsg/types.hpp"
#include "numsg/verify.hpp"

#endif  // NUMSG_NUMSG_HPP
