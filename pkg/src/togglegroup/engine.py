"""Exact subgroup computations from a generating set.

A :class:`StabilizerChain` is a base with strong generators, basic orbits
and transversals, built by the deterministic incremental Schreier-Sims
algorithm: distribute generators along the base, then sift Schreier
generators level by level until every one reduces to the identity.  That
termination condition is what certifies the chain, so ``order`` (the
product of basic orbit sizes) and ``contains`` (membership by sifting) are
exact.  No randomization: a fixed generator order rebuilds the identical
chain.  Orders are plain Python ints, which are arbitrary precision.

Internally image tables are numpy arrays (composition is fancy indexing,
which is what the construction spends its time on); the public surface
speaks :class:`~togglegroup.perms.Permutation` values only.
"""

from __future__ import annotations

import math
import random
from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .perms import DegreeMismatchError, Permutation

__all__ = ["StabilizerChain", "build_chain", "orbit"]

# worklist entries encode a (orbit point, generator index) pair as
# point * _STRIDE + index; generator counts stay far below the stride
_STRIDE = 1_000_000

# the boost phase gives up after this many consecutive fruitless products
_BOOST_STALL_LIMIT = 64


def _invert(a: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    out[a] = np.arange(len(a), dtype=a.dtype)
    return out


class StabilizerChain:
    """Base and strong generating set for the group a generating set spans.

    Level i stabilizes the first i base points; its basic orbit is the
    orbit of base point i under the level's strong generators, and the
    transversal maps each orbit point to a coset representative sending
    the base point there.  A finished chain is never mutated, so it can be
    queried from concurrent contexts without synchronization.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int) -> None:
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.degree = degree
        self._ident = np.arange(degree, dtype=np.intp)
        self._ident_bytes = self._ident.tobytes()
        self._base: list[int] = []            # 0-based base points
        self._base_arr = np.empty(0, dtype=np.intp)
        self._gens: list[list[np.ndarray]] = []   # strong generators per level
        self._invs: list[list[np.ndarray]] = []
        self._trans: list[dict[int, np.ndarray]] = []  # orbit point -> representative
        self._tbytes: list[dict[int, bytes]] = []      # same entries, for equality
        self._tinv: list[dict[int, np.ndarray]] = []
        self._pts: list[list[int]] = []       # orbit in discovery order
        self._inorb: list[np.ndarray] = []    # orbit membership masks
        self._work: list[deque[int]] = []     # pending Schreier pairs per level
        self._scanned: list[int] = []         # generators already closed over, per level
        self._collect_pairs = False           # queue Schreier pairs (verified build only)
        self._build(generators)

    # -- construction ------------------------------------------------------

    def _build(self, generators: Iterable[Permutation]) -> None:
        raws: list[np.ndarray] = []
        seen: set[bytes] = set()
        for g in generators:
            if g.degree != self.degree:
                raise DegreeMismatchError(
                    f"generator of degree {g.degree} does not act on 1..{self.degree}"
                )
            r = np.array(g._img, dtype=np.intp)
            key = r.tobytes()
            if key != self._ident_bytes and key not in seen:
                seen.add(key)
                raws.append(r)

        if raws and self._boost_full_symmetric(raws):
            return
        self._reset_levels()
        self._collect_pairs = True

        # choose base points so that every generator moves one
        for r in raws:
            if all(r[b] == b for b in self._base):
                self._append_level(int(np.nonzero(r != self._ident)[0][0]))
        # distribute: level i holds the generators fixing the first i base points
        for r in raws:
            inv = _invert(r)
            d = 0
            while d < len(self._base) and r[self._base[d]] == self._base[d]:
                d += 1
            for i in range(d + 1):
                self._add_generator(i, r, inv)
        for i in range(len(self._base)):
            self._extend_orbit(i)

        # the transversal products already realize order() many distinct
        # group elements, so hitting degree! certifies the chain outright
        # (the basic orbits are then as large as they can possibly be and
        # every Schreier generator is caught); skip the remaining sifting
        full_order = math.factorial(self.degree)
        i = len(self._base) - 1
        while i >= 0 and self.order() != full_order:
            found = self._first_unwitnessed(i)
            if found is None:
                i -= 1
                continue
            residue, j = found
            if j == len(self._base):
                self._append_level(int(np.nonzero(residue != self._ident)[0][0]))
            rinv = _invert(residue)
            for level in range(i + 1, j + 1):
                self._add_generator(level, residue, rinv)
                self._extend_orbit(level)
            i = j
        self._work = []  # construction is done; queues are spent

    def _reset_levels(self) -> None:
        self._base = []
        self._base_arr = np.empty(0, dtype=np.intp)
        self._gens, self._invs = [], []
        self._trans, self._tbytes, self._tinv = [], [], []
        self._pts, self._inorb, self._work = [], [], []
        self._scanned = []

    def _boost_full_symmetric(self, raws: list[np.ndarray]) -> bool:
        """Try to certify the group as all of S_degree by counting alone.

        Sifts a deterministic (fixed-seed product replacement) stream of
        elements, storing each non-identity residue at the level where its
        sift sticks.  Transversal products are pairwise distinct group
        elements, so the orbit-size product is a lower bound on the order;
        reaching degree! proves the group is the full symmetric group and
        that the orbits are complete, which makes the chain exact as is.
        Gives up (and reports False) once the stream stops contributing,
        as it must for any proper subgroup.
        """
        target = math.factorial(self.degree)
        # initial distribution, as in the verified build
        for r in raws:
            if all(r[b] == b for b in self._base):
                self._append_level(int(np.nonzero(r != self._ident)[0][0]))
        for r in raws:
            inv = _invert(r)
            d = 0
            while d < len(self._base) and r[self._base[d]] == self._base[d]:
                d += 1
            for i in range(d + 1):
                self._add_generator(i, r, inv)
        for i in range(len(self._base)):
            self._extend_orbit(i)

        rng = random.Random(0x5EED)  # fixed seed: runs are reproducible
        slots = list(raws) + [self._ident] * max(0, 8 - len(raws))
        w = self._ident
        def stir() -> np.ndarray:
            nonlocal w
            a = rng.randrange(len(slots))
            b = rng.randrange(len(slots) - 1)
            if b >= a:
                b += 1
            other = slots[b] if rng.randrange(2) else _invert(slots[b])
            slots[a] = slots[a][other]
            w = w[slots[a]]
            return w
        for _ in range(64):  # burn-in mixes the slots
            stir()
        stall = 0
        while stall < _BOOST_STALL_LIMIT:
            if self.order() == target:
                return True
            residue, j = self._sift_raw(stir(), 0)
            if residue.tobytes() == self._ident_bytes:
                stall += 1
                continue
            if j == len(self._base):
                self._append_level(int(np.nonzero(residue != self._ident)[0][0]))
            self._add_generator(j, residue, _invert(residue))
            self._extend_orbit(j)
            slots.append(residue)
            stall = 0
        return False

    def _append_level(self, base_point: int) -> None:
        self._base.append(base_point)
        self._base_arr = np.array(self._base, dtype=np.intp)
        self._gens.append([])
        self._invs.append([])
        self._trans.append({base_point: self._ident})
        self._tbytes.append({base_point: self._ident_bytes})
        self._tinv.append({base_point: self._ident})
        self._pts.append([base_point])
        mask = np.zeros(self.degree, dtype=bool)
        mask[base_point] = True
        self._inorb.append(mask)
        self._work.append(deque())
        self._scanned.append(0)

    def _add_generator(self, i: int, r: np.ndarray, inv: np.ndarray) -> None:
        # every (existing orbit point, new generator) pair needs a Schreier
        # check; pairs with orbit points not yet discovered are queued by
        # _extend_orbit when the points appear
        gi = len(self._gens[i])
        self._gens[i].append(r)
        self._invs[i].append(inv)
        if self._collect_pairs:
            work = self._work[i]
            for p in self._pts[i]:
                work.append(p * _STRIDE + gi)

    def _adjoin_point(self, i: int, x: int, rep: np.ndarray, rep_inv: np.ndarray) -> None:
        self._trans[i][x] = rep
        self._tbytes[i][x] = rep.tobytes()
        self._tinv[i][x] = rep_inv
        self._pts[i].append(x)
        self._inorb[i][x] = True
        if self._collect_pairs:
            base = x * _STRIDE
            self._work[i].extend(base + gi for gi in range(len(self._gens[i])))

    def _extend_orbit(self, i: int) -> None:
        # close the basic orbit under the level's generators; existing
        # transversal entries are kept, new points appended in scan order.
        # points scanned before only have to revisit generators added since
        trans, tinv = self._trans[i], self._tinv[i]
        pts, inorb = self._pts[i], self._inorb[i]
        gens, invs = self._gens[i], self._invs[i]
        first_new = self._scanned[i]
        self._scanned[i] = len(gens)
        old_count = len(pts)
        if first_new < len(gens):
            chunk_pts = pts[:old_count]
            chunk = np.array(chunk_pts, dtype=np.intp)
            for gi in range(first_new, len(gens)):
                s, si = gens[gi], invs[gi]
                for t in np.nonzero(~inorb[s[chunk]])[0].tolist():
                    p = chunk_pts[t]
                    x = int(s[p])
                    if not inorb[x]:
                        self._adjoin_point(i, x, s[trans[p]], tinv[p][si])
        k = old_count
        while k < len(pts):
            chunk_pts = pts[k:]
            chunk = np.array(chunk_pts, dtype=np.intp)
            k = len(pts)
            for s, si in zip(gens, invs):
                for t in np.nonzero(~inorb[s[chunk]])[0].tolist():
                    p = chunk_pts[t]
                    x = int(s[p])
                    if not inorb[x]:
                        self._adjoin_point(i, x, s[trans[p]], tinv[p][si])

    def _first_unwitnessed(self, i):
        # first pending Schreier generator of level i that does not sift to
        # the identity through the deeper levels, or None; a failing pair
        # stays queued so it is re-checked after the deeper levels grow
        work = self._work[i]
        trans, tbytes, tinv = self._trans[i], self._tbytes[i], self._tinv[i]
        gens = self._gens[i]
        b = self._base[i]
        while work:
            p, gi = divmod(work[0], _STRIDE)
            su = gens[gi][trans[p]]
            x = int(su[b])  # the generator's image of p
            if su.tobytes() == tbytes[x]:
                work.popleft()
                continue
            h = tinv[x][su]
            residue, j = self._sift_raw(h, i + 1)
            if residue.tobytes() == self._ident_bytes:
                work.popleft()
                continue
            return residue, j
        return None

    def _sift_raw(self, g: np.ndarray, start: int) -> tuple[np.ndarray, int]:
        # strip transversal representatives; jumps straight to the next base
        # point the running residue moves
        base_arr = self._base_arr
        n_levels = len(self._base)
        level = start
        while level < n_levels:
            tail = base_arr[level:]
            neq = g[tail] != tail
            if not neq.any():
                return g, n_levels
            level += int(neq.argmax())
            x = int(g[base_arr[level]])
            iu = self._tinv[level].get(x)
            if iu is None:
                return g, level
            g = iu[g]
            level += 1
        return g, n_levels

    # -- queries -----------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        """The base points, 1-based."""
        return tuple(b + 1 for b in self._base)

    def basic_orbits(self) -> tuple[tuple[int, ...], ...]:
        """Per level, the basic orbit (1-based, in discovery order)."""
        return tuple(tuple(p + 1 for p in pts) for pts in self._pts)

    def basic_orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(pts) for pts in self._pts)

    def strong_generators(self) -> tuple[Permutation, ...]:
        out: list[Permutation] = []
        seen: set[bytes] = set()
        for level_gens in self._gens:
            for r in level_gens:
                key = r.tobytes()
                if key not in seen:
                    seen.add(key)
                    out.append(Permutation._from_raw(tuple(int(v) for v in r)))
        return tuple(out)

    def order(self) -> int:
        """Exact group order: the product of the basic orbit sizes."""
        total = 1
        for pts in self._pts:
            total *= len(pts)
        return total

    def contains(self, g: Permutation) -> bool:
        """Membership by sifting through the transversals."""
        if g.degree != self.degree:
            raise DegreeMismatchError(
                f"element of degree {g.degree} cannot lie in a group on 1..{self.degree}"
            )
        residue, _ = self._sift_raw(np.array(g._img, dtype=np.intp), 0)
        return residue.tobytes() == self._ident_bytes

    def is_full_symmetric(self) -> bool:
        """Whether the group is all of S_degree.

        Equivalent to order == degree!, read off the basic orbit sizes:
        they must be exactly degree, degree-1, ..., 2.
        """
        sizes = sorted(self.basic_orbit_sizes(), reverse=True)
        return sizes == list(range(self.degree, 1, -1))

    def contains_alternating(self) -> bool:
        """Whether every 3-cycle (i,i+1,i+2) is a member; these generate
        the alternating group on 1..degree."""
        m = self.degree
        if m < 3:
            raise ValueError("alternating-group check needs degree at least 3")
        for i in range(m - 2):
            img = np.arange(m, dtype=np.intp)
            img[i], img[i + 1], img[i + 2] = i + 1, i + 2, i
            residue, _ = self._sift_raw(img, 0)
            if residue.tobytes() != self._ident_bytes:
                return False
        return True

    def validate(self) -> None:
        """Re-check the structural invariants; raises ValueError on damage."""
        if len(set(self._base)) != len(self._base):
            raise ValueError("base points are not distinct")
        for i, b in enumerate(self._base):
            for r in self._gens[i]:
                if any(r[self._base[j]] != self._base[j] for j in range(i)):
                    raise ValueError(f"level {i} generator moves an earlier base point")
            for p, u in self._trans[i].items():
                if u[b] != p:
                    raise ValueError(f"transversal entry at level {i} misses its point")
                if self._tbytes[i][p] != u.tobytes():
                    raise ValueError(f"byte cache mismatch at level {i}")
                if self._tinv[i][p][u].tobytes() != self._ident_bytes:
                    raise ValueError(f"inverse transversal mismatch at level {i}")

    def __repr__(self) -> str:
        return (
            f"<StabilizerChain deg={self.degree} base={self.base} "
            f"order={self.order()}>"
        )


def build_chain(generators: Sequence[Permutation], degree: int) -> StabilizerChain:
    """Deterministic stabilizer chain for the group the generators span.

    The empty generating set gives the trivial group.  Base points are the
    smallest point moved at each level, so a fixed input order always
    rebuilds the identical chain.
    """
    return StabilizerChain(generators, degree)


def orbit(generators: Sequence[Permutation], point: int) -> frozenset[int]:
    """The orbit of a 1-based point under the group the generators span,
    by breadth-first closure."""
    gens = list(generators)
    if gens:
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError("generators act on different domains")
        if not 1 <= point <= degree:
            raise ValueError(f"point {point} out of range for degree {degree}")
    elif point < 1:
        raise ValueError("points are 1-based")
    raws = [g._img for g in gens]
    start = point - 1
    seen = {start}
    queue = [start]
    k = 0
    while k < len(queue):
        p = queue[k]
        k += 1
        for r in raws:
            x = r[p]
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return frozenset(p + 1 for p in seen)
