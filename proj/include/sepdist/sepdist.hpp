// Copyright 2026 The sepdist Authors
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

#ifndef SEPDIST_SEPDIST_HPP
#define SEPDIST_SEPDIST_HPP

#include "sepdist/bounds.hpp"
#include "sepdist/catalog.hpp"
#include "sepdist/ensemble.hpp"
#include "sepdist/fidelity.hpp"
#include "sepdist/io.hpp"
#include "sepdist/linalg.hpp"
#include "sepdist/measurement.hpp"
#include "sepdist/search.hpp"
#include "sepdist/state.hpp"
#include "sepdist/types.hpp"

#endif  // SEPDIST_SEPDIST_HPP
