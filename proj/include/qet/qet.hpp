// Copyright 2026 The QET Authors
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

#include "qet/catalog.hpp"
#include "qet/channel.hpp"
#include "qet/classical.hpp"
#include "qet/f2.hpp"
#include "qet/lattice.hpp"
#include "qet/parallel.hpp"
#include "qet/pauli.hpp"
#include "qet/report.hpp"
#include "qet/search.hpp"
#include "qet/stabilizer.hpp"
#include "qet/transforms.hpp"
#include "qet/verify.hpp"
