// Copyright 2026 The scover Authors
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

// Umbrella header: the whole library.

#include "scover/cnf.hpp"      // IWYU pragma: export
#include "scover/codec.hpp"    // IWYU pragma: export
#include "scover/core.hpp"     // IWYU pragma: export
#include "scover/gen.hpp"      // IWYU pragma: export
#include "scover/reduce.hpp"   // IWYU pragma: export
#include "scover/solve.hpp"    // IWYU pragma: export
#include "scover/verify.hpp"   // IWYU pragma: export
