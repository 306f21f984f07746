"""Parsing, validation, anonymization and serialization of discovery-event logs.

A discovery event is a single sighting of a device by a scanner at an
instant.  The on-disk format is one event per line:

    timestamp,scanner_id,device_id

with an optional first header line ``timestamp,scanner_id,device_id``,
UTF-8, LF line endings, no quoting.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, replace

from .errors import EmptyField, EmptySalt, MalformedLine

HEADER = "timestamp,scanner_id,device_id"

ANON_HEX_WIDTH = 32  # 16-byte keyed digest rendered as hex


@dataclass(frozen=True, order=True)
class DiscoveryEvent:
    """One sighting of a device by a scanner at an instant."""

    timestamp: float
    scanner_id: str
    device_id: str


def _parse_timestamp(field: str, line_no: int) -> float:
    try:
        t = float(field)
    except ValueError:
        raise MalformedLine(line_no, f"unparsable timestamp {field!r}") from None
    if not math.isfinite(t) or t < 0:
        raise MalformedLine(line_no, f"timestamp {field!r} not finite and non-negative")
    return t


def parse_scan_log(raw: bytes | str) -> list[DiscoveryEvent]:
    """Parse a scan-log CSV into events, in file order.

    Malformed lines are rejected loudly (MalformedLine / EmptyField), never
    skipped: a corrupted log should fail, not silently thin out.
    """
    text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    events: list[DiscoveryEvent] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\r")
        if line_no == 1 and line == HEADER:
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise MalformedLine(line_no, f"expected 3 fields, got {len(fields)}")
        ts_field, scanner_id, device_id = fields
        if not ts_field or not scanner_id or not device_id:
            raise EmptyField(line_no)
        timestamp = _parse_timestamp(ts_field, line_no)
        events.append(DiscoveryEvent(timestamp, scanner_id, device_id))
    return events


def _format_timestamp(t: float) -> str:
    # integers without a trailing ".0", everything else via repr (round-trips)
    if t == int(t):
        return str(int(t))
    return repr(t)


def serialize_scan_log(events: list[DiscoveryEvent], header: bool = True) -> str:
    """Render events back to the scan-log CSV format (inverse of parse)."""
    lines = [HEADER] if header else []
    for e in events:
        lines.append(f"{_format_timestamp(e.timestamp)},{e.scanner_id},{e.device_id}")
    return "\n".join(lines) + "\n" if lines else ""


def anonymize_devices(
    events: list[DiscoveryEvent], salt: bytes | str
) -> list[DiscoveryEvent]:
    """Replace device ids with a deterministic keyed hash (32 hex chars).

    Same (device_id, salt) always maps to the same output, so equality
    structure, list length and order are preserved.  Collisions across
    distinct devices are treated as practically impossible and not checked.
    """
    if isinstance(salt, str):
        salt = salt.encode("utf-8")
    if not salt:
        raise EmptySalt("salt must be non-empty")
    cache: dict[str, str] = {}
    out = []
    for e in events:
        hashed = cache.get(e.device_id)
        if hashed is None:
            digest = hashlib.blake2b(
                e.device_id.encode("utf-8"), key=salt[:64], digest_size=ANON_HEX_WIDTH // 2
            )
            hashed = digest.hexdigest()
            cache[e.device_id] = hashed
        out.append(replace(e, device_id=hashed))
    return out
