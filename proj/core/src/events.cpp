#include "swarmforage/events.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace swarmforage {

std::string_view to_string(EventKind kind) {
    switch (kind) {
    case EventKind::Depart: return "depart";
    case EventKind::Drain: return "drain";
    case EventKind::Collect: return "collect";
    case EventKind::Respawn: return "respawn";
    case EventKind::Deposit: return "deposit";
    case EventKind::Arrive: return "arrive";
    case EventKind::RoundEnd: return "round_end";
    case EventKind::Park: return "park";
    case EventKind::Death: return "death";
    }
    return "?";
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

void EventLog::write_tsv(std::ostream& out) const {
    for (const Event& e : events_) {
        out << e.tick << '\t' << e.robot << '\t' << to_string(e.kind) << '\t' << e.payload
            << '\n';
    }
}

std::string EventLog::to_tsv() const {
    std::ostringstream out;
    write_tsv(out);
    return out.str();
}

} // namespace swarmforage
