// Copyright 2026 The triortho Authors.
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

#ifndef TRIORTHO_TRIORTHO_HPP
#define TRIORTHO_TRIORTHO_HPP

#include "triortho/classical_codes.hpp"
#include "triortho/css_builder.hpp"
#include "triortho/errors.hpp"
#include "triortho/function_field.hpp"
#include "triortho/gf2m.hpp"
#include "triortho/matrix.hpp"
#include "triortho/polynomial.hpp"
#include "triortho/random.hpp"
#include "triortho/reference_data.hpp"
#include "triortho/serialization.hpp"
#include "triortho/state_reduction.hpp"
#include "triortho/tower_calculus.hpp"

#endif  // TRIORTHO_TRIORTHO_HPP
