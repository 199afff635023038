// Copyright 2026 The STIRUP Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "stirup/harness/run.hpp"

namespace stirup::harness {

void parallel_for(int count, int workers, const std::function<void(int)> &body) {
    if (count <= 0) {
        return;
    }
    if (workers <= 0) {
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    workers = std::min(workers, count);
    std::atomic<int> next{0};
    std::mutex mutex;
    int failed_index = count;
    std::exception_ptr failure;
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back(worker);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

RunReport sweep(const ScenarioConfig &config, int workers) {
    validate_config(config);
    if (!config.sweep) {
        throw ConfigError({"sweep: <missing>: the sweep command needs a sweep section"});
    }
    const SweepSpec &spec = *config.sweep;
    const int n = static_cast<int>(spec.values.size());
    RunReport report;
    report.records.resize(n);
    parallel_for(n, workers, [&](int i) {
        const ScenarioConfig point = apply_sweep_value(config, spec.parameter, spec.values[i]);
        RunRecord rec = run_point(point, false).record;
        rec.index = i;
        rec.parameter = spec.parameter;
        rec.value = spec.values[i];
        report.records[i] = rec;
    });
    write_file(config.output_dir, config.output_prefix + "_sweep.csv",
               [&](std::ostream &os) { write_report_csv(os, report); });
    return report;
}

} // namespace stirup::harness
