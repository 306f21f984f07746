"""Detect encounters (overlapping sessions at one scanner) and aggregate them.

Two people encounter each other when their presence sessions at the same
scanner intersect in time.  Intervals are closed, so sessions that merely
touch (overlap of exactly 0 s) still count: discovery timestamps are sparse
samples of continuous presence.  Use min_overlap to filter if needed.

Detection sweeps start-sorted sessions per scanner with an active heap,
which is sub-quadratic whenever concurrency is bounded.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass

from .errors import MalformedLine
from .sessionizer import Session

ENCOUNTERS_HEADER = "device_a,device_b,scanner_id,overlap_start,overlap_end"
EDGES_HEADER = "device_a,device_b,scanner_id,encounter_count,total_overlap"


@dataclass(frozen=True)
class Encounter:
    device_a: str  # device_a < device_b lexicographically
    device_b: str
    scanner_id: str
    overlap_start: float
    overlap_end: float

    @property
    def duration(self) -> float:
        return self.overlap_end - self.overlap_start

    def sort_key(self):
        return (self.scanner_id, self.overlap_start, self.device_a, self.device_b)


@dataclass(frozen=True)
class EdgeRecord:
    device_a: str
    device_b: str
    scanner_id: str
    encounter_count: int
    total_overlap: float


def detect_encounters(
    sessions: list[Session], min_overlap: float = 0.0
) -> list[Encounter]:
    """One Encounter per pair of intersecting sessions at the same scanner.

    Overlap interval is [max(starts), min(ends)] on closed intervals.
    Output sorted by (scanner, overlap_start, device_a, device_b).
    """
    by_scanner: dict[str, list[Session]] = defaultdict(list)
    for s in sessions:
        by_scanner[s.scanner_id].append(s)

    out: list[Encounter] = []
    for scanner_id, group in by_scanner.items():
        group.sort(key=lambda s: (s.start, s.end, s.device_id))
        active: list[tuple[float, str, float]] = []  # (end, device, start) heap
        for s in group:
            while active and active[0][0] < s.start:
                heapq.heappop(active)
            for end, device, start in active:
                if device == s.device_id:
                    continue
                o_start = max(start, s.start)
                o_end = min(end, s.end)
                if o_end - o_start < min_overlap:
                    continue
                a, b = sorted((device, s.device_id))
                out.append(Encounter(a, b, scanner_id, o_start, o_end))
            heapq.heappush(active, (s.end, s.device_id, s.start))
    out.sort(key=Encounter.sort_key)
    return out


def aggregate_edges(encounters: list[Encounter]) -> list[EdgeRecord]:
    """Sum encounters per (pair, scanner) into weighted edge records."""
    tallies: dict[tuple[str, str, str], list[float]] = defaultdict(lambda: [0, 0.0])
    for e in encounters:
        t = tallies[(e.device_a, e.device_b, e.scanner_id)]
        t[0] += 1
        t[1] += e.duration
    records = [
        EdgeRecord(a, b, scanner, int(count), total)
        for (a, b, scanner), (count, total) in tallies.items()
    ]
    records.sort(key=lambda r: (r.scanner_id, r.device_a, r.device_b))
    return records


def serialize_encounters(encounters: list[Encounter]) -> str:
    lines = [ENCOUNTERS_HEADER]
    for e in encounters:
        lines.append(
            f"{e.device_a},{e.device_b},{e.scanner_id},{e.overlap_start:.3f},{e.overlap_end:.3f}"
        )
    return "\n".join(lines) + "\n"


def serialize_edges(records: list[EdgeRecord]) -> str:
    lines = [EDGES_HEADER]
    for r in records:
        lines.append(
            f"{r.device_a},{r.device_b},{r.scanner_id},{r.encounter_count},{r.total_overlap:.3f}"
        )
    return "\n".join(lines) + "\n"


def parse_edges(text: str) -> list[EdgeRecord]:
    records = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\r")
        if line_no == 1 and line == EDGES_HEADER:
            continue
        fields = line.split(",")
        if len(fields) != 5:
            raise MalformedLine(line_no, f"expected 5 fields, got {len(fields)}")
        a, b, scanner, count, total = fields
        try:
            records.append(EdgeRecord(a, b, scanner, int(count), float(total)))
        except ValueError:
            raise MalformedLine(line_no, "unparsable edge weights") from None
    return records
