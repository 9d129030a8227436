#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hilbert/engine_options.hpp"

namespace hilbert {

unsigned threads_from_environment()
{
    const char* value = std::getenv("HILBERT_THREADS");
    if (value != nullptr) {
        try {
            std::size_t used = 0;
            unsigned long n = std::stoul(value, &used);
            if (used == std::string(value).size())
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return std::thread::hardware_concurrency();
}

namespace detail {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body)
{
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
            }
        }
    };
    std::size_t extra = std::min<std::size_t>(threads, count) - 1;
    std::vector<std::jthread> pool;
    pool.reserve(extra);
    for (std::size_t t = 0; t < extra; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace detail
} // namespace hilbert
