#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace smashcalc {

// Every parallel kernel has a serial reference path selected by Exec::Serial.
enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec e);
int worker_count();

namespace detail {

template <class Fn>
void run_indexed(std::size_t n, Fn&& fn, Exec exec)
{
    if (exec == Exec::Serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::exception_ptr error;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(smashcalc_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

}  // namespace detail

// Calls fn(i) for i in [0, n).
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn, Exec exec = default_exec())
{
    detail::run_indexed(n, fn, exec);
}

// Runs a check over n cases; fn(i) returns a witness string on failure.
// Failures come back in index order, so serial and parallel results are identical.
template <class Fn>
std::vector<std::string> collect_failures(std::size_t n, Fn&& fn, Exec exec = default_exec(), std::size_t keep = 8)
{
    std::vector<std::optional<std::string>> slots(n);
    detail::run_indexed(n, [&](std::size_t i) { slots[i] = fn(i); }, exec);
    std::vector<std::string> out;
    for (auto& s : slots)
        if (s && out.size() < keep)
            out.push_back(std::move(*s));
    return out;
}

// Same as collect_failures but also reports how many cases failed in total.
template <class Fn>
std::pair<std::size_t, std::vector<std::string>> count_failures(std::size_t n, Fn&& fn, Exec exec = default_exec(),
                                                                std::size_t keep = 8)
{
    std::vector<std::optional<std::string>> slots(n);
    detail::run_indexed(n, [&](std::size_t i) { slots[i] = fn(i); }, exec);
    std::size_t total = 0;
    std::vector<std::string> out;
    for (auto& s : slots) {
        if (!s)
            continue;
        ++total;
        if (out.size() < keep)
            out.push_back(std::move(*s));
    }
    return {total, out};
}

}  // namespace smashcalc
