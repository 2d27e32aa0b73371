"""Operator-supplied inputs: citation counts and the claims registry."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from newsflow.errors import ParseError
from newsflow.profiles.valence import GroupCitationCounts

GROUPS = ("left", "right")


@dataclass(frozen=True)
class Claim:
    claim_id: str
    text: str
    topic_id: str


@dataclass(frozen=True)
class CitationRow:
    user_id: str
    group: str
    medium_id: str
    topic_id: str
    count: int


def load_citations(path: str | Path) -> list[CitationRow]:
    """Parse the citations CSV: user_id,group,medium_id,topic_id,count."""
    rows: list[CitationRow] = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row_no, row in enumerate(csv.reader(fh), start=1):
            if not row or row[0].startswith("#"):
                continue
            if row_no == 1 and row[0].strip().lower() == "user_id":
                continue
            if len(row) != 5:
                raise ParseError(f"citations row {row_no}: expected 5 fields")
            user_id, group, medium_id, topic_id, count = (c.strip() for c in row)
            if group not in GROUPS:
                raise ParseError(f"citations row {row_no}: unknown group {group!r}")
            try:
                n = int(count)
            except ValueError:
                raise ParseError(f"citations row {row_no}: bad count {count!r}") from None
            if n < 0:
                raise ParseError(f"citations row {row_no}: negative count")
            rows.append(CitationRow(user_id, group, medium_id, topic_id, n))
    return rows


def aggregate_citations(rows: list[CitationRow]) -> list[GroupCitationCounts]:
    """Collapse citation rows into per-(medium, topic) group counts.

    Group C0 is "right", C1 is "left" (the orientation convention used
    by valence labeling). Totals are per topic, summed across media.
    """
    tf: dict[tuple[str, str], dict[str, int]] = {}
    totals: dict[str, dict[str, int]] = {}
    for row in rows:
        key = (row.medium_id, row.topic_id)
        tf.setdefault(key, {"left": 0, "right": 0})[row.group] += row.count
        totals.setdefault(row.topic_id, {"left": 0, "right": 0})[row.group] += row.count
    out = []
    for (medium_id, topic_id), counts in sorted(tf.items()):
        tot = totals[topic_id]
        out.append(
            GroupCitationCounts(
                medium_id=medium_id,
                topic_id=topic_id,
                tf_c0=counts["right"],
                tf_c1=counts["left"],
                total_c0=tot["right"],
                total_c1=tot["left"],
            )
        )
    return out


def load_claims(path: str | Path) -> list[Claim]:
    """Parse the claims registry JSON: a list of claim objects."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, list):
        raise ParseError("claims registry must be a JSON array")
    claims = []
    for i, obj in enumerate(raw):
        try:
            claims.append(
                Claim(str(obj["claim_id"]), str(obj["text"]), str(obj["topic_id"]))
            )
        except (TypeError, KeyError):
            raise ParseError(f"claims entry {i}: need claim_id, text, topic_id") from None
    return claims
