"""The published table of odd spoof k-perfect numbers s = n*x of order alpha
(x prime and coprime to n), and a diff against search results."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

# (s, n, x, k, alpha)
TABLE_1: tuple[tuple[int, int, int, int, int], ...] = (
    (15, 5, 3, 16, 3),
    (33, 11, 3, 44, 4),
    (1911, 637, 3, 152, 5),
    (1989, 153, 13, 280, 3),
    (34485, 11495, 3, 56, 4),
    (36309, 12103, 3, 160, 5),
    (77805, 11115, 7, 16, 2),
    (92781, 1521, 61, 97, 2),
    (105435, 21087, 5, 256, 4),
    (181545, 60515, 3, 192, 5),
    (241395, 80465, 3, 64, 4),
    (8999757, 147537, 61, 98, 2),
    (62998299, 1032759, 61, 112, 2),
    (440988093, 7229313, 61, 114, 2),
)

FIELDS = ("s", "n", "x", "k", "alpha")


def golden_rows(n_max: int | None = None, rows=TABLE_1) -> list[tuple[int, ...]]:
    """Rows whose n is at most ``n_max`` (all rows when None)."""
    return [r for r in rows if n_max is None or r[1] <= n_max]


def load_rows(path: str | Path) -> list[tuple[int, ...]]:
    """Read a golden table from a CSV file with an s,n,x,k,alpha header."""
    with open(path, newline="") as fh:
        return [tuple(int(row[f]) for f in FIELDS) for row in csv.DictReader(fh)]


@dataclass
class TableDiff:
    expected: int
    matched: int = 0
    missing: list[tuple[int, ...]] = field(default_factory=list)
    extra: list[tuple[int, ...]] = field(default_factory=list)
    mismatched: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.extra or self.mismatched)

    def lines(self) -> list[str]:
        out = []
        for want, got in self.mismatched:
            fields = ", ".join(
                f"{name} expected {w} got {g}" for name, w, g in zip(FIELDS, want, got) if w != g
            )
            out.append(f"mismatch at s={want[0]}: {fields}")
        out += [f"missing: {_fmt(r)}" for r in self.missing]
        out += [f"extra:   {_fmt(r)}" for r in self.extra]
        out.append(f"{self.matched}/{self.expected} rows matched")
        return out


def _fmt(row) -> str:
    return " ".join(f"{name}={v}" for name, v in zip(FIELDS, row))


def diff_rows(expected, found) -> TableDiff:
    """Compare row tuples; rows sharing s but differing elsewhere count as mismatches."""
    want = sorted(set(map(tuple, expected)))
    got = sorted(set(map(tuple, found)))
    diff = TableDiff(expected=len(want))
    exact = set(want) & set(got)
    diff.matched = len(exact)
    left = [r for r in want if r not in exact]
    right = [r for r in got if r not in exact]
    by_s = {}
    for r in right:
        by_s.setdefault(r[0], []).append(r)
    for r in left:
        partner = by_s.get(r[0])
        if partner:
            other = partner.pop(0)
            right.remove(other)
            diff.mismatched.append((r, other))
        else:
            diff.missing.append(r)
    diff.extra = right
    return diff
