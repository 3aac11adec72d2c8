// Copyright 2026 The Steerage Authors
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

#include "steerage/asymmetry.hpp"
#include "steerage/circle_fourier.hpp"
#include "steerage/common.hpp"
#include "steerage/ellipsoid.hpp"
#include "steerage/elliptic.hpp"
#include "steerage/gmodel.hpp"
#include "steerage/pauli.hpp"
#include "steerage/quadrature.hpp"
#include "steerage/quantity.hpp"
#include "steerage/report.hpp"
#include "steerage/state_input.hpp"
