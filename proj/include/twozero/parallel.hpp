/*
   Copyright 2026 The twozero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TWOZERO_PARALLEL_HPP
#define TWOZERO_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace twozero {

/// Split [0, total) into one contiguous block per worker and run
/// body(begin, end, worker) on each. Worker 0 runs on the calling thread.
/// The first exception thrown by any worker is rethrown after all join.
template <class Body>
void parallel_blocks(std::uint64_t total, unsigned workers, Body&& body) {
    if (workers == 0) workers = 1;
    if (total < workers) workers = total == 0 ? 1 : static_cast<unsigned>(total);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        const std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
        try {
            body(begin, end, w);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, w);
    run(0);
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace twozero

#endif
