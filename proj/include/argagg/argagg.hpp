//  Copyright 2026 The argagg Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ARGAGG_ARGAGG_HPP_
#define ARGAGG_ARGAGG_HPP_

#include "argagg/errors.hpp"
#include "argagg/af.hpp"
#include "argagg/lattice.hpp"
#include "argagg/aggregation.hpp"
#include "argagg/issues.hpp"
#include "argagg/metrics.hpp"
#include "argagg/preferences.hpp"
#include "argagg/analysis.hpp"
#include "argagg/io.hpp"
#include "argagg/suite.hpp"

#endif  // ARGAGG_ARGAGG_HPP_
