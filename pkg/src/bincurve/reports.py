"""Canonical JSON emission and plain-text tables.

Reports must be byte-identical across reruns and worker counts, so: keys
sorted, no whitespace variation, no timestamps or timing inside payloads.
"""
from __future__ import annotations

import json

from . import __version__


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True)


def envelope(command: str, label: str, config: dict, payload) -> dict:
    """Uniform report wrapper: what ran, with what knobs, producing what."""
    return {
        "command": command,
        "label": label,
        "version": __version__,
        "config": config,
        "report": payload,
    }


def text_table(headers, rows) -> str:
    """Aligned columns, header underline; everything str()-ed."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row]
                                           for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    def fmt(row):
        return "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
    lines = [fmt(cells[0]), fmt(["-" * w for w in widths])]
    lines += [fmt(r) for r in cells[1:]]
    return "\n".join(lines)
