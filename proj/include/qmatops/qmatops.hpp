// Copyright 2026 The qmatops Authors
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

/// @file Umbrella header pulling in the whole library.

#pragma once

#include "qmatops/algorithms.hpp"
#include "qmatops/core.hpp"
#include "qmatops/encoding.hpp"
#include "qmatops/gates.hpp"
#include "qmatops/matrix_json.hpp"
#include "qmatops/oracle.hpp"
#include "qmatops/qstate.hpp"
#include "qmatops/register_layout.hpp"
#include "qmatops/sweep.hpp"
