// Copyright 2026 The cff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cff/errors.hpp"
#include "cff/ff.hpp"
#include "cff/poly.hpp"
#include "cff/curve.hpp"
#include "cff/splitting.hpp"
#include "cff/order.hpp"
#include "cff/ideal.hpp"
#include "cff/places.hpp"
#include "cff/idealarith.hpp"
#include "cff/classgroup.hpp"
#include "cff/oracle.hpp"
#include "cff/io.hpp"
#include "cff/golden.hpp"
