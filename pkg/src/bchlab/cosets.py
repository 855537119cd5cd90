"""q-cyclotomic cosets modulo n: orbits of Z_n under multiplication by q."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of an integer mod n under e -> e*q, with its smallest member."""

    leader: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)


def coset_of(e: int, n: int, q: int) -> CyclotomicCoset:
    """The q-cyclotomic coset of e modulo n.

    Requires gcd(n, q) = 1 so that multiplication by q permutes Z_n.
    """
    if gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) must be 1")
    if not 0 <= e < n:
        raise ValueError(f"e={e} out of range [0, {n})")
    members = [e]
    cur = (e * q) % n
    while cur != e:
        members.append(cur)
        cur = (cur * q) % n
    members.sort()
    return CyclotomicCoset(leader=members[0], members=tuple(members))


def all_cosets(n: int, q: int) -> list[CyclotomicCoset]:
    """All distinct q-cyclotomic cosets mod n, sorted by leader.

    The cosets partition Z_n.
    """
    if gcd(n, q) != 1:
        raise ValueError(f"gcd(n={n}, q={q}) must be 1")
    seen = [False] * n
    out = []
    for e in range(n):
        if seen[e]:
            continue
        c = coset_of(e, n, q)
        for m in c.members:
            seen[m] = True
        out.append(c)
    return out


__all__ = ["CyclotomicCoset", "coset_of", "all_cosets"]
