#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace swarmforage {

enum class EventKind {
    Depart,   // left the nest to search
    Drain,    // per-tick energy decrement (payload: amount)
    Collect,  // picked a resource up (payload: pickup cost)
    Respawn,  // a replacement resource appeared (payload: x;y)
    Deposit,  // dropped a resource at the nest (payload: total delivered)
    Arrive,   // reached the nest and started charging
    RoundEnd, // adaptation ran (payload: lower;upper;target)
    Park,     // retired in the nest
    Death,    // battery hit zero in the field
};

std::string_view to_string(EventKind kind);

struct Event {
    long tick = 0;
    int robot = -1; // -1 for world-level events
    EventKind kind{};
    std::string payload;
};

/// Append-only record stream of one run. Logging is opt-in: the world takes
/// a null log for sweep runs.
class EventLog {
public:
    void append(long tick, int robot, EventKind kind, std::string payload = {}) {
        events_.push_back({tick, robot, kind, std::move(payload)});
    }

    const std::vector<Event>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }

    /// Tab-separated: tick, robot, event, payload.
    void write_tsv(std::ostream& out) const;
    std::string to_tsv() const;

private:
    std::vector<Event> events_;
};

/// Shortest round-trip decimal form, locale-independent (std::to_chars).
std::string format_double(double value);

} // namespace swarmforage
