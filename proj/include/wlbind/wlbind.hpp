// Copyright 2026 The wlbind Authors.
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

#ifndef WLBIND_WLBIND_HPP_
#define WLBIND_WLBIND_HPP_

#include "wlbind/binding.hpp"
#include "wlbind/claims.hpp"
#include "wlbind/codec.hpp"
#include "wlbind/decider.hpp"
#include "wlbind/graph.hpp"
#include "wlbind/harness.hpp"
#include "wlbind/oracle.hpp"
#include "wlbind/report.hpp"
#include "wlbind/wl.hpp"

#endif  // WLBIND_WLBIND_HPP_
