#include "smooth/execution.hpp"

#include <sys/resource.h>
#include <unistd.h>

#include <cstdio>

namespace smooth {

namespace {
thread_local const ExecutionHooks* tls_hooks = nullptr;
thread_local unsigned tls_poll_count = 0;
}  // namespace

ExecutionScope::ExecutionScope(const ExecutionHooks* hooks) : previous_(tls_hooks) { tls_hooks = hooks; }
ExecutionScope::~ExecutionScope() { tls_hooks = previous_; }

const ExecutionHooks* current_hooks() { return tls_hooks; }

void check_interrupt() {
  const ExecutionHooks* h = tls_hooks;
  if (!h) return;
  if (h->cancelled && h->cancelled()) throw Interrupted(Interrupted::Reason::cancelled, "cancelled");
  if (h->deadline && std::chrono::steady_clock::now() > *h->deadline)
    throw Interrupted(Interrupted::Reason::time_limit, "time limit exceeded");
  if (h->max_memory_bytes && (++tls_poll_count & 1023) == 0 && current_memory_bytes() > *h->max_memory_bytes)
    throw Interrupted(Interrupted::Reason::memory_limit, "memory limit exceeded");
}

std::size_t peak_memory_bytes() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
  return static_cast<std::size_t>(usage.ru_maxrss) * 1024;
}

std::size_t current_memory_bytes() {
  std::FILE* f = std::fopen("/proc/self/statm", "r");
  if (!f) return 0;
  unsigned long size = 0, resident = 0;
  int read = std::fscanf(f, "%lu %lu", &size, &resident);
  std::fclose(f);
  if (read != 2) return 0;
  return static_cast<std::size_t>(resident) * static_cast<std::size_t>(sysconf(_SC_PAGESIZE));
}

}  // namespace smooth
