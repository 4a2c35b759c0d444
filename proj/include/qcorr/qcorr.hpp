// Copyright 2026 The qcorr developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qcorr/correlation.hpp"
#include "qcorr/io.hpp"
#include "qcorr/observables.hpp"
#include "qcorr/probability.hpp"
#include "qcorr/rational.hpp"
#include "qcorr/scenarios.hpp"
#include "qcorr/states.hpp"
#include "qcorr/tensor.hpp"
