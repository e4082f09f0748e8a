// Copyright 2026 The hops Authors
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

#pragma once

#include "hops/problems/absolute_loss.hpp"
#include "hops/problems/blocks.hpp"
#include "hops/problems/hinge_l1.hpp"
#include "hops/problems/io.hpp"
#include "hops/problems/matrix_decomp.hpp"
#include "hops/problems/polyhedron.hpp"
#include "hops/problems/rof.hpp"
