// Copyright 2026 The revsurf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Umbrella header for the revsurf core library.

#include "revsurf/curvature.hpp"
#include "revsurf/embeddability.hpp"
#include "revsurf/embedding.hpp"
#include "revsurf/errors.hpp"
#include "revsurf/expression.hpp"
#include "revsurf/jet.hpp"
#include "revsurf/mesh_io.hpp"
#include "revsurf/profile.hpp"
#include "revsurf/quadrature.hpp"
#include "revsurf/search.hpp"
#include "revsurf/spline.hpp"
