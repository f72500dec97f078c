// SPDX-License-Identifier: Apache-2.0
//
// Umbrella include for the reverse-Schwarz bound library.

#pragma once

#include "schwarz/space.hpp"
#include "schwarz/conditions.hpp"
#include "schwarz/bounds.hpp"
#include "schwarz/witness.hpp"
#include "schwarz/integral.hpp"
#include "schwarz/generate.hpp"
#include "schwarz/verify.hpp"
