// Copyright 2026 The skrates Authors.
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

#ifndef SKRATES_SKRATES_HPP_
#define SKRATES_SKRATES_HPP_

#include "skrates/bounds.hpp"
#include "skrates/capacity.hpp"
#include "skrates/config.hpp"
#include "skrates/entropy.hpp"
#include "skrates/error.hpp"
#include "skrates/gf2.hpp"
#include "skrates/greedy.hpp"
#include "skrates/json_io.hpp"
#include "skrates/lp.hpp"
#include "skrates/mmi.hpp"
#include "skrates/partition.hpp"
#include "skrates/protocol.hpp"
#include "skrates/rational.hpp"
#include "skrates/source.hpp"
#include "skrates/tree_packing.hpp"

#endif  // SKRATES_SKRATES_HPP_
