// Copyright 2026 The chipfire Authors
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

#pragma once

#include "chipfire/brute_force.hpp"
#include "chipfire/certify.hpp"
#include "chipfire/constructions.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/errors.hpp"
#include "chipfire/fixture_checks.hpp"
#include "chipfire/fixtures.hpp"
#include "chipfire/flow.hpp"
#include "chipfire/generators.hpp"
#include "chipfire/gonality.hpp"
#include "chipfire/hitting_set.hpp"
#include "chipfire/invariants.hpp"
#include "chipfire/io.hpp"
#include "chipfire/multigraph.hpp"
#include "chipfire/scramble.hpp"
#include "chipfire/sn_bounds.hpp"
#include "chipfire/vertex_set.hpp"
