/* Copyright (C) 2026 The padic-diaphony authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include "padic/arith.hpp"
#include "padic/diaphony.hpp"
#include "padic/error.hpp"
#include "padic/halton.hpp"
#include "padic/kernel.hpp"
#include "padic/padic.hpp"
#include "padic/summation.hpp"
#include "padic/weights.hpp"
