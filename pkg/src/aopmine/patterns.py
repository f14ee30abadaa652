"""Pattern algebra: one-step subpatterns and the two ways to grow a pattern.

A length-m pattern grows rightward either by fusing two overlapping patterns
whose shared interior agrees, or by enumerating every possible rank for one
new trailing element. Fusion emits far fewer candidates, which is the whole
point of preferring it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Pattern, RankVector, compute_ranks


@dataclass(frozen=True)
class FusionResult:
    """Superpatterns produced by fusing one ordered pattern pair.

    ``case_tag`` records which arm of the construction fired: 1 when the left
    pattern's head outranks the right pattern's tail (one result), 2 when the
    two tie (both resolutions are emitted, two results), and 3 when the head
    ranks below the tail (one result).
    """

    produced: tuple[Pattern, ...]
    case_tag: int


def prefixorder(p: Pattern) -> RankVector:
    """Rank vector of the pattern with its last element dropped.

    For a length-2 pattern the result is the degenerate vector ``(1,)``; it
    is not a pattern itself but makes fusibility checks work from length 2
    upward.
    """
    if len(p) < 2:
        raise ValueError(f"pattern too short for a prefix: {p!r}")
    return compute_ranks(p[:-1])


def suffixorder(p: Pattern) -> RankVector:
    """Rank vector of the pattern with its first element dropped."""
    if len(p) < 2:
        raise ValueError(f"pattern too short for a suffix: {p!r}")
    return compute_ranks(p[1:])


def fusible(p: Pattern, q: Pattern) -> bool:
    """True when p's suffix shape equals q's prefix shape."""
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} vs {len(q)}")
    return suffixorder(p) == prefixorder(q)


def fuse(p: Pattern, q: Pattern) -> FusionResult:
    """Fuse two fusible length-m patterns into length-(m+1) superpatterns.

    Read p as the ranks of positions 1..m and q as the ranks of positions
    2..m+1 of one longer window; the overlap agrees by fusibility, so only
    the relative order of p's head and q's tail is open:

    * head > tail: bump the head by one and every q rank above it by one,
      then prepend. One superpattern.
    * head = tail: their order is ambiguous, so both resolutions are emitted
      (head-wins first, tail-wins second). Two superpatterns.
    * head < tail: mirror construction around the tail. One superpattern.

    Every produced vector is a permutation of 1..m+1 whose prefix and suffix
    shapes recover p and q.
    """
    if not fusible(p, q):
        raise ValueError(f"patterns are not fusible: {p!r} and {q!r}")
    head, tail = p[0], q[-1]
    head_wins = (head + 1,) + tuple(v + 1 if v > head else v for v in q)
    tail_wins = tuple(v + 1 if v > tail else v for v in p) + (tail + 1,)
    if head > tail:
        return FusionResult((head_wins,), 1)
    if head == tail:
        return FusionResult((head_wins, tail_wins), 2)
    return FusionResult((tail_wins,), 3)


def enumerate_extensions(p: Pattern) -> tuple[Pattern, ...]:
    """All m+1 superpatterns that append one element to the pattern.

    The new trailing element takes every possible rank v in 1..m+1; existing
    ranks at or above v shift up by one. Results are in ascending order of v
    and are pairwise distinct.
    """
    out = []
    for v in range(1, len(p) + 2):
        out.append(tuple(r + 1 if r >= v else r for r in p) + (v,))
    return tuple(out)


def fusion_candidates(patterns: Iterable[Pattern]) -> tuple[Pattern, ...]:
    """Superpattern candidates from fusing every fusible ordered pair.

    Pairs iterate in sorted pattern order, self-pairs included. Distinct
    pairs can never produce the same superpattern (its prefix and suffix
    shapes pin down the parents), so the result is duplicate-free.
    """
    pats = sorted(patterns)
    out: list[Pattern] = []
    for p in pats:
        for q in pats:
            if fusible(p, q):
                out.extend(fuse(p, q).produced)
    return tuple(out)


def enumeration_candidates(patterns: Iterable[Pattern]) -> tuple[Pattern, ...]:
    """Superpattern candidates from extending each pattern every possible way."""
    out: list[Pattern] = []
    for p in sorted(patterns):
        out.extend(enumerate_extensions(p))
    return tuple(out)
