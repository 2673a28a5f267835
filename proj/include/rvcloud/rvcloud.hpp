// Copyright 2026 The rvcloud Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "rvcloud/allowed_set.hpp"
#include "rvcloud/coloring.hpp"
#include "rvcloud/distribution.hpp"
#include "rvcloud/dot.hpp"
#include "rvcloud/errors.hpp"
#include "rvcloud/exact.hpp"
#include "rvcloud/explain.hpp"
#include "rvcloud/expression.hpp"
#include "rvcloud/graph.hpp"
#include "rvcloud/ids.hpp"
#include "rvcloud/io.hpp"
#include "rvcloud/model.hpp"
#include "rvcloud/pipeline.hpp"
#include "rvcloud/report.hpp"
#include "rvcloud/simulator.hpp"
#include "rvcloud/translate.hpp"
#include "rvcloud/validation.hpp"
