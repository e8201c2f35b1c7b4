#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace smooth {

class GroebnerCache;

/// Thrown out of long computations when a run is cancelled or exhausts a limit.
class Interrupted : public std::runtime_error {
 public:
  enum class Reason { cancelled, time_limit, memory_limit, basis_limit };
  Interrupted(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }
  bool is_limit() const { return reason_ != Reason::cancelled; }

 private:
  Reason reason_;
};

/// Per-thread controls consulted by the Groebner engine and minor enumeration.
/// All members are optional; a thread without hooks runs unrestricted.
struct ExecutionHooks {
  std::function<bool()> cancelled;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::optional<std::size_t> max_basis_size;
  std::optional<std::size_t> max_memory_bytes;
  GroebnerCache* cache = nullptr;
  /// Called before each Groebner basis computation (not on cache hits).
  std::function<void()> on_groebner_start;
  /// Called for every Groebner request, cache hits included.
  std::function<void()> on_groebner_request;
};

/// Installs hooks for the current thread until destruction; scopes nest.
class ExecutionScope {
 public:
  explicit ExecutionScope(const ExecutionHooks* hooks);
  ~ExecutionScope();
  ExecutionScope(const ExecutionScope&) = delete;
  ExecutionScope& operator=(const ExecutionScope&) = delete;

 private:
  const ExecutionHooks* previous_;
};

const ExecutionHooks* current_hooks();

/// Throws Interrupted when the current thread's run was cancelled or ran out
/// of time or memory. Cheap enough for inner loops.
void check_interrupt();

/// Peak resident set size of the process in bytes, 0 if unavailable.
std::size_t peak_memory_bytes();
/// Current resident set size in bytes, 0 if unavailable.
std::size_t current_memory_bytes();

}  // namespace smooth
