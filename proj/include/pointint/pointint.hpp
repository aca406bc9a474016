// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pointint/bethe.hpp"
#include "pointint/boundary_condition.hpp"
#include "pointint/classify.hpp"
#include "pointint/commands.hpp"
#include "pointint/core.hpp"
#include "pointint/io.hpp"
#include "pointint/random.hpp"
#include "pointint/scan.hpp"
#include "pointint/spectrum.hpp"
#include "pointint/tensor.hpp"
#include "pointint/ybe.hpp"
