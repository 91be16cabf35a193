// Copyright 2026 The ncnsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file Everything in one include.

#pragma once

#include "ncn/circuit.hpp"
#include "ncn/cost.hpp"
#include "ncn/errors.hpp"
#include "ncn/grover.hpp"
#include "ncn/io.hpp"
#include "ncn/linalg.hpp"
#include "ncn/matrices.hpp"
#include "ncn/pipeline.hpp"
#include "ncn/random.hpp"
#include "ncn/simulator.hpp"
#include "ncn/synth.hpp"
#include "ncn/transform.hpp"
#include "ncn/zyz.hpp"
