// Copyright 2026 The Qudit Block Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Simulation path: system bookkeeping, states, gates, block kernels,
// circuits and the text format. The reference oracle is deliberately not
// part of this umbrella; include "qudit/oracle.hpp" explicitly.

#include "qudit/circuit.hpp"
#include "qudit/error.hpp"
#include "qudit/gates.hpp"
#include "qudit/kernel.hpp"
#include "qudit/op.hpp"
#include "qudit/parser.hpp"
#include "qudit/simulator.hpp"
#include "qudit/state.hpp"
#include "qudit/system.hpp"
