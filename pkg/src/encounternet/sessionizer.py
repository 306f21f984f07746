"""Turn discrete discovery events into presence sessions.

A session is a maximal interval during which a device is continuously
present at one scanner: consecutive sightings closer than the gap
threshold are merged, then each session is padded symmetrically so that a
single sighting still represents a small window of real presence.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import InvalidConfig, MalformedLine
from .scanlog import DiscoveryEvent

# A person away for over ten minutes counts as a new visit.
DEFAULT_GAP_THRESHOLD = 600.0
# Half a 10.24 s Bluetooth inquiry cycle; set pad=0 for strict mode.
DEFAULT_PAD = 5.12

SESSIONS_HEADER = "device_id,scanner_id,start,end"


@dataclass(frozen=True, order=True)
class Session:
    device_id: str
    scanner_id: str
    start: float
    end: float

    @property
    def duration(self) -> float:
        return self.end - self.start


@dataclass(frozen=True)
class SessionConfig:
    gap_threshold: float = DEFAULT_GAP_THRESHOLD
    pad: float = DEFAULT_PAD

    def validate(self) -> None:
        if self.gap_threshold <= 0:
            raise InvalidConfig("gap_threshold must be > 0")
        if self.pad < 0:
            raise InvalidConfig("pad must be >= 0")
        if self.pad >= self.gap_threshold / 2:
            raise InvalidConfig("pad must be < gap_threshold / 2")


def sessionize(
    events: list[DiscoveryEvent], config: SessionConfig = SessionConfig()
) -> list[Session]:
    """Group events by (device, scanner) and merge runs of close sightings.

    Input order is irrelevant; output is sorted by (device, scanner, start).
    """
    config.validate()
    groups: dict[tuple[str, str], list[float]] = defaultdict(list)
    for e in events:
        groups[(e.device_id, e.scanner_id)].append(e.timestamp)

    sessions: list[Session] = []
    for (device_id, scanner_id), times in groups.items():
        times.sort()
        run_start = run_end = times[0]
        for t in times[1:]:
            if t - run_end <= config.gap_threshold:
                run_end = t
            else:
                sessions.append(
                    Session(device_id, scanner_id, run_start - config.pad, run_end + config.pad)
                )
                run_start = run_end = t
        sessions.append(
            Session(device_id, scanner_id, run_start - config.pad, run_end + config.pad)
        )
    sessions.sort()
    return sessions


def total_presence(sessions: list[Session]) -> dict[tuple[str, str], float]:
    """Total seconds each device spent at each scanner; absent keys mean zero."""
    totals: dict[tuple[str, str], float] = defaultdict(float)
    for s in sessions:
        totals[(s.device_id, s.scanner_id)] += s.duration
    return dict(totals)


def serialize_sessions(sessions: list[Session]) -> str:
    lines = [SESSIONS_HEADER]
    for s in sessions:
        lines.append(f"{s.device_id},{s.scanner_id},{s.start:.3f},{s.end:.3f}")
    return "\n".join(lines) + "\n"


def parse_sessions(text: str) -> list[Session]:
    sessions = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\r")
        if line_no == 1 and line == SESSIONS_HEADER:
            continue
        fields = line.split(",")
        if len(fields) != 4:
            raise MalformedLine(line_no, f"expected 4 fields, got {len(fields)}")
        device_id, scanner_id, start, end = fields
        try:
            sessions.append(Session(device_id, scanner_id, float(start), float(end)))
        except ValueError:
            raise MalformedLine(line_no, "unparsable interval bounds") from None
    return sessions
