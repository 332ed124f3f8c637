#pragma once

#include "csurg/errors.hpp"
#include "csurg/rational.hpp"
#include "csurg/neg_cf.hpp"
#include "csurg/matrix.hpp"
#include "csurg/smith.hpp"
#include "csurg/diagram.hpp"
#include "csurg/contact_kirby.hpp"
#include "csurg/invariants.hpp"
#include "csurg/spin_tracking.hpp"
#include "csurg/reduction.hpp"
#include "csurg/rp3.hpp"
#include "csurg/text_io.hpp"
