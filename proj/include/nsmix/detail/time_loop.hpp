#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <vector>

#include "nsmix/errors.hpp"
#include "nsmix/meso_solver.hpp"

namespace nsmix::detail {

/// Shared driver for both solvers: fixed snapshot schedule, dt clipping
/// for exact snapshot hits, one retry at dt/2 before giving up.
template <class State, class Step, class Dt, class Record>
void time_loop(State& state, const MesoConfig& cfg, Step step, Dt next_dt, Record record,
               std::vector<double>& dt_history) {
    std::vector<double> stops = cfg.snapshot_times;
    if (stops.empty() || stops.front() > 0.0) stops.insert(stops.begin(), 0.0);
    if (stops.back() < cfg.final_time) stops.push_back(cfg.final_time);

    record(state);
    std::size_t next_stop = 1;
    while (next_stop < stops.size()) {
        const double target = stops[next_stop];
        double dt = std::min(next_dt(state), target - state.time);
        bool hits_target = state.time + dt >= target - 1e-14 * std::max(1.0, target);
        if (hits_target) dt = target - state.time;
        try {
            state = step(state, dt);
        } catch (const SolverError&) {
            dt *= 0.5;
            hits_target = false;
            try {
                state = step(state, dt);
            } catch (const SolverError& e) {
                std::ostringstream os;
                os << e.what() << " [t=" << state.time << ", dt=" << dt << " after one retry]";
                throw SolverError(os.str());
            }
        }
        dt_history.push_back(dt);
        if (hits_target) {
            state.time = target; // pin the hit bitwise
            record(state);
            ++next_stop;
        }
    }
}

} // namespace nsmix::detail
