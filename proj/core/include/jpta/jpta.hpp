// SPDX-License-Identifier: Apache-2.0
//
// jpta: beam design and uplink evaluation for joint phase-time arrays
// Copyright (C) 2026 The jpta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef JPTA_JPTA_HPP
#define JPTA_JPTA_HPP

#include "jpta/array.hpp"
#include "jpta/codebook.hpp"
#include "jpta/csv.hpp"
#include "jpta/link.hpp"
#include "jpta/sysim.hpp"

#endif
