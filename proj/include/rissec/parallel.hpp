// SPDX-License-Identifier: Apache-2.0
//
// ris-secrecy: spatial secrecy optimization for RIS-assisted MISO links
// Copyright (C) 2026 ris-secrecy developers
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

#ifndef RISSEC_PARALLEL_HPP
#define RISSEC_PARALLEL_HPP

#include <functional>

namespace rissec
{

// Worker count: RIS_SECRECY_THREADS env var caps it, otherwise the hardware
// concurrency is used.
int worker_count();

// Runs fn(i) for i in [0, n). Work items must be independent; each item
// writes only to its own output slot, so results do not depend on the
// worker count or scheduling order. Exceptions are captured and rethrown
// on the calling thread.
void parallel_for(int n, const std::function<void(int)> &fn);

} // namespace rissec

#endif
