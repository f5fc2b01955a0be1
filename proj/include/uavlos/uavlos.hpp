// Copyright 2026 The uavlos Authors
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

#include "uavlos/analytic.hpp"
#include "uavlos/assoc.hpp"
#include "uavlos/bench.hpp"
#include "uavlos/boolean.hpp"
#include "uavlos/channel.hpp"
#include "uavlos/error.hpp"
#include "uavlos/geometry.hpp"
#include "uavlos/gridlos.hpp"
#include "uavlos/plot.hpp"
#include "uavlos/rng.hpp"
#include "uavlos/scene.hpp"
#include "uavlos/scene_io.hpp"
#include "uavlos/shadowcast.hpp"
#include "uavlos/triangulate.hpp"
#include "uavlos/visibility.hpp"
