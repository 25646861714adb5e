#pragma once
// Additive-combinatorics sets and equations used by the colorings.

#include "rainbow/ap_free.hpp"
#include "rainbow/equations.hpp"
#include "rainbow/finite_field.hpp"
#include "rainbow/int_set.hpp"
#include "rainbow/sidon.hpp"
