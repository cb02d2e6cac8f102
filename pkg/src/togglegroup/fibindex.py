"""Fibonacci numbers and the recursive rank bijection for path independent sets.

``rank(n, members)`` assigns each independent set of the path on vertices
1..n a position in 1..f(n+2), splitting on whether the last vertex is
present: sets without vertex n keep their rank in the smaller path, sets
with vertex n are shifted past them by f(n+1).  ``unrank`` inverts it.
"""

from __future__ import annotations

from typing import Iterable

__all__ = [
    "FIB_CEILING",
    "FibCeilingError",
    "drop_end_vertex",
    "fib",
    "rank",
    "shift_identity_holds",
    "unrank",
]

# f(64) ~ 1.6e13 already dwarfs anything enumerable; requests past the
# ceiling get a clear error instead of a runaway computation.
FIB_CEILING = 64

_table = [0, 1]


class FibCeilingError(ValueError):
    """Fibonacci index beyond the configured ceiling."""


def fib(n: int) -> int:
    """The n-th Fibonacci number: f(0)=0, f(1)=1, f(n)=f(n-1)+f(n-2)."""
    if n < 0:
        raise ValueError("Fibonacci index must be non-negative")
    if n > FIB_CEILING:
        raise FibCeilingError(f"Fibonacci index {n} exceeds ceiling {FIB_CEILING}")
    while len(_table) <= n:
        _table.append(_table[-1] + _table[-2])
    return _table[n]


def _checked_members(n: int, members: Iterable[int]) -> frozenset[int]:
    s = frozenset(members)
    for v in s:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range for path on 1..{n}")
        if v + 1 in s:
            raise ValueError(f"set is not independent: {v} and {v + 1} are adjacent")
    return s


def rank(n: int, members: Iterable[int]) -> int:
    """The index in 1..f(n+2) of an independent set of the path on 1..n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    cur = set(_checked_members(n, members))
    acc = 0
    m = n
    while m > 2:
        if m in cur:
            acc += fib(m + 1)
            cur.discard(m)
            m -= 2
        else:
            m -= 1
    # m is now 1 or 2 and cur is one of {}, {1}, {2}
    if 2 in cur:
        return acc + 3
    if 1 in cur:
        return acc + 2
    return acc + 1


def unrank(n: int, idx: int) -> frozenset[int]:
    """The independent set of the path on 1..n whose rank is ``idx``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= idx <= fib(n + 2):
        raise ValueError(f"index {idx} out of range 1..{fib(n + 2)}")
    members: set[int] = set()
    m = n
    r = idx
    while m > 2:
        if r > fib(m + 1):
            members.add(m)
            r -= fib(m + 1)
            m -= 2
        else:
            m -= 1
    if r == 2:
        members.add(1)
    elif r == 3:
        members.add(2)
    return frozenset(members)


def drop_end_vertex(n: int, members: Iterable[int]) -> frozenset[int]:
    """Remove vertex n from an independent set containing it.

    The result is an independent set of the path on 1..n-2 (vertex n-1
    cannot be present alongside n).
    """
    s = _checked_members(n, members)
    if n not in s:
        raise ValueError(f"vertex {n} is not in the set")
    return s - {n}


def shift_identity_holds(n: int) -> bool:
    """Check rank(n, I + {n}) == rank(n, I) + f(n+1) over all I on 1..n-2."""
    if n < 3:
        raise ValueError("n must be at least 3")
    shift = fib(n + 1)
    for j in range(1, fib(n) + 1):
        inner = unrank(n - 2, j)
        if rank(n, inner | {n}) != rank(n, inner) + shift:
            return False
    return True
