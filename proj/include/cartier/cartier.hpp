// Copyright 2026 The cartier library developers
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
//
// Umbrella header: the whole library except the JSON adapters, which pull in
// the vendored nlohmann header and live in cartier/serialize.hpp.

#pragma once

#include "cartier/bipoly.hpp"
#include "cartier/codes.hpp"
#include "cartier/curves.hpp"
#include "cartier/engine.hpp"
#include "cartier/errors.hpp"
#include "cartier/gf.hpp"
#include "cartier/linalg.hpp"
#include "cartier/parallel.hpp"
#include "cartier/unipoly.hpp"
