"""Machine checks for the toggle-group results, with structured reports.

Each verifier checks one claim exhaustively at a given size and returns a
:class:`VerificationReport`; a failing report always carries a concrete
counterexample.  ``verify_all`` runs every applicable check up to a size
bound under a resource profile; checks that would blow the profile's
bounds come back ``skipped``, never silently passed.

Several verifiers accept an override for the generator family so that test
suites can inject faults and confirm the checks actually catch them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .engine import build_chain
from .families import (
    DiagonalSubgroupSpec,
    block_swap,
    diagonal_embed,
    family,
    generator,
    prime_family,
    toggle_permutation,
)
from .fibindex import fib, rank, unrank
from .graphs import _path_sets_in_rank_order, _toggle_path_members, format_set_text
from .perms import Permutation, format_cycles

__all__ = [
    "FULL_CHAIN_DEGREE_CAP",
    "FULL_ENUMERATION_CAP",
    "QUICK_CHAIN_DEGREE_CAP",
    "QUICK_ENUMERATION_CAP",
    "VerificationReport",
    "all_claim_ids",
    "verify_all",
    "verify_count_and_transitivity",
    "verify_coxeter_relations",
    "verify_diagonal_generation",
    "verify_golden_cases",
    "verify_intertwining",
    "verify_symmetric_generation",
    "verify_three_cycles",
]

# quick keeps everything interactive; full covers the documented desk scale
# (stabilizer chains are ample up to degree 377 = f(14))
QUICK_ENUMERATION_CAP = 1000
FULL_ENUMERATION_CAP = 1_000_000
QUICK_CHAIN_DEGREE_CAP = 55
FULL_CHAIN_DEGREE_CAP = 377

_STATUSES = ("pass", "fail", "skipped")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one claim check at one size."""

    claim_id: str
    n: Optional[int]
    status: str
    details: str
    counterexample: Optional[dict] = None

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError(f"status must be one of {_STATUSES}")
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("failing reports must carry a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def text_line(self) -> str:
        where = f" n={self.n}" if self.n is not None else ""
        line = f"{self.status.upper():>7} {self.claim_id}{where}: {self.details}"
        if self.counterexample is not None:
            pairs = ", ".join(f"{k}={v}" for k, v in sorted(self.counterexample.items()))
            line += f" [counterexample: {pairs}]"
        return line

    def json_dict(self) -> dict:
        out: dict = {
            "claim_id": self.claim_id,
            "n": self.n,
            "status": self.status,
            "details": self.details,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _passed(claim_id: str, n: Optional[int], details: str) -> VerificationReport:
    return VerificationReport(claim_id, n, "pass", details)


def _failed(claim_id: str, n: Optional[int], details: str, counterexample: dict) -> VerificationReport:
    return VerificationReport(claim_id, n, "fail", details, counterexample)


def _skipped(claim_id: str, n: Optional[int], details: str) -> VerificationReport:
    return VerificationReport(claim_id, n, "skipped", details)


def verify_intertwining(
    n: int, members: Optional[Sequence[Permutation]] = None
) -> VerificationReport:
    """rank(toggle_k(I)) == member_k(rank(I)) for every k and every I.

    Exhaustive over all f(n+2) independent sets and all n toggles, then a
    follow-up equality of the induced permutations themselves.
    """
    claim = "intertwining"
    if n < 1:
        raise ValueError("n must be at least 1")
    if members is None:
        members = family(n).members
    count = fib(n + 2)
    sets = _path_sets_in_rank_order(n)
    for k in range(1, n + 1):
        t = members[k - 1]
        for idx in range(1, count + 1):
            toggled = _toggle_path_members(k, sets[idx - 1])
            expected = rank(n, toggled)
            got = t.apply(idx)
            if expected != got:
                return _failed(
                    claim,
                    n,
                    f"toggle at k={k} disagrees with the family member",
                    {
                        "k": k,
                        "set": format_set_text(sets[idx - 1]),
                        "index": idx,
                        "expected": expected,
                        "got": got,
                    },
                )
        induced = toggle_permutation(n, k)
        if induced != t:
            return _failed(
                claim,
                n,
                f"induced permutation differs from the family member at k={k}",
                {"k": k, "induced": format_cycles(induced), "member": format_cycles(t)},
            )
    return _passed(
        claim, n,
        f"checked {n * count} toggle/rank pairs; induced permutations equal the members",
    )


def verify_symmetric_generation(
    n: int, generators: Optional[Sequence[Permutation]] = None
) -> VerificationReport:
    """The family at size n generates all of S_f(n+2)."""
    claim = "symmetric-generation"
    if n < 1:
        raise ValueError("n must be at least 1")
    if generators is None:
        generators = family(n).members
    degree = fib(n + 2)
    chain = build_chain(generators, degree)
    if chain.is_full_symmetric():
        return _passed(claim, n, f"group order is {degree}! = {chain.order()}")
    counter: dict = {"order": str(chain.order()), "expected": str(math.factorial(degree))}
    for i in range(1, degree):
        swap = Permutation.from_cycles([(i, i + 1)], degree)
        if not chain.contains(swap):
            counter["missing"] = format_cycles(swap)
            break
    return _failed(claim, n, "generated group is a proper subgroup", counter)


def verify_diagonal_generation(
    n: int,
    generators: Optional[Sequence[Permutation]] = None,
    samples: int = 100,
) -> VerificationReport:
    """The reduced family generates exactly the diagonal copy of S_f(n).

    Certified three ways: every strong generator satisfies the diagonal
    membership conditions, the order is exactly f(n)!, and sampled
    diagonal elements all sift into the chain.
    """
    claim = "diagonal-generation"
    if n < 3:
        raise ValueError("n must be at least 3")
    if generators is None:
        generators = prime_family(n)
    degree = fib(n + 2)
    spec = DiagonalSubgroupSpec(n)
    chain = build_chain(generators, degree)
    for g in chain.strong_generators():
        if not spec.contains(g):
            return _failed(
                claim, n, "a strong generator leaves the diagonal subgroup",
                {"generator": format_cycles(g)},
            )
    expected = math.factorial(fib(n))
    got = chain.order()
    if got != expected:
        return _failed(
            claim, n, f"order is not {fib(n)}!",
            {"order": str(got), "expected": str(expected)},
        )
    rng = random.Random(1000 + n)
    low = fib(n)
    for _ in range(samples):
        images = list(range(1, low + 1))
        rng.shuffle(images)
        member = diagonal_embed(n, Permutation(images))
        if not chain.contains(member):
            return _failed(
                claim, n, "a diagonal element is missing from the group",
                {"element": format_cycles(member)},
            )
    return _passed(
        claim, n,
        f"order {fib(n)}! confirmed, strong generators diagonal, {samples} samples sift",
    )


def verify_three_cycles(
    n: int, generators: Optional[Sequence[Permutation]] = None
) -> VerificationReport:
    """The generated group contains every consecutive 3-cycle (i,i+1,i+2)."""
    claim = "three-cycles"
    if n < 4:
        raise ValueError("n must be at least 4")
    if generators is None:
        generators = family(n).members
    degree = fib(n + 2)
    chain = build_chain(generators, degree)
    for i in range(1, degree - 1):
        cycle = Permutation.from_cycles([(i, i + 1, i + 2)], degree)
        if not chain.contains(cycle):
            return _failed(
                claim, n, "a consecutive 3-cycle is missing",
                {"cycle": format_cycles(cycle)},
            )
    return _passed(claim, n, f"all {degree - 2} consecutive 3-cycles are members")


def verify_coxeter_relations(
    n: int, members: Optional[Sequence[Permutation]] = None
) -> VerificationReport:
    """Toggle relations on ranks: involutions, distant pairs commute, and
    adjacent products have order dividing 6."""
    claim = "coxeter-relations"
    if n < 1:
        raise ValueError("n must be at least 1")
    if members is None:
        members = [toggle_permutation(n, k) for k in range(1, n + 1)]
    degree = fib(n + 2)
    ident = Permutation.identity(degree)
    for k in range(1, n + 1):
        p = members[k - 1]
        if p * p != ident:
            return _failed(claim, n, "a toggle is not an involution", {"k": k})
    for k in range(1, n + 1):
        for k2 in range(k + 2, n + 1):
            a, b = members[k - 1], members[k2 - 1]
            if a * b != b * a:
                return _failed(
                    claim, n, "distant toggles do not commute", {"k": k, "k2": k2}
                )
    for k in range(1, n):
        ab = members[k - 1] * members[k]
        power = ident
        for _ in range(6):
            power = ab * power
        if power != ident:
            return _failed(
                claim, n, "(toggle_k toggle_k+1)^6 is not the identity", {"k": k}
            )
    return _passed(claim, n, "involution, commutation and sixth-power relations hold")


def verify_count_and_transitivity(n: int) -> VerificationReport:
    """There are f(n+2) independent sets and the toggles connect them all."""
    claim = "count-transitivity"
    if n < 1:
        raise ValueError("n must be at least 1")
    sets = _path_sets_in_rank_order(n)
    expected = fib(n + 2)
    if len(sets) != expected:
        return _failed(
            claim, n, "independent-set count is off",
            {"count": len(sets), "expected": expected},
        )
    if len(set(sets)) != len(sets):
        return _failed(claim, n, "enumeration repeats a set", {"count": len(sets)})
    seen = {frozenset()}
    queue = [frozenset()]
    k = 0
    while k < len(queue):
        current = queue[k]
        k += 1
        for v in range(1, n + 1):
            nxt = _toggle_path_members(v, current)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    if len(seen) != expected:
        missing = next(s for s in sets if s not in seen)
        return _failed(
            claim, n, "toggles do not reach every independent set",
            {"reached": len(seen), "expected": expected, "missing": format_set_text(missing)},
        )
    return _passed(claim, n, f"{expected} sets, all reachable from the empty set")


_GOLDEN_BLOCK_SWAPS = {1: "(1,2)", 2: "(1,3)", 3: "(1,4)(2,5)", 4: "(1,6)(2,7)(3,8)"}

_GOLDEN_FAMILIES = {
    1: ("(1,2)",),
    2: ("(1,2)", "(1,3)"),
    3: ("(1,2)(4,5)", "(1,3)", "(1,4)(2,5)"),
    4: ("(1,2)(4,5)(6,7)", "(1,3)(6,8)", "(1,4)(2,5)", "(1,6)(2,7)(3,8)"),
}

_GOLDEN_PRIME_FAMILIES = {
    3: ("(1,2)(4,5)",),
    4: ("(1,2)(4,5)(6,7)", "(1,3)(6,8)"),
}

_GOLDEN_INDEX_TABLES = {
    1: (("{}", 1), ("{1}", 2)),
    2: (("{}", 1), ("{1}", 2), ("{2}", 3)),
    3: (("{}", 1), ("{1}", 2), ("{2}", 3), ("{3}", 4), ("{1,3}", 5)),
    4: (
        ("{}", 1), ("{1}", 2), ("{2}", 3), ("{3}", 4),
        ("{1,3}", 5), ("{4}", 6), ("{1,4}", 7), ("{2,4}", 8),
    ),
}

# (n, k, set text, rank before, rank after) -- the full small-size traces
_GOLDEN_TOGGLE_TRACES = (
    (1, 1, "{}", 1, 2),
    (1, 1, "{1}", 2, 1),
    (2, 1, "{}", 1, 2),
    (2, 1, "{1}", 2, 1),
    (2, 1, "{2}", 3, 3),
    (2, 2, "{}", 1, 3),
    (2, 2, "{1}", 2, 2),
    (2, 2, "{2}", 3, 1),
)


def verify_golden_cases() -> VerificationReport:
    """The hand-computable small cases, byte-exact in canonical text."""
    claim = "golden-cases"
    for n, expected in _GOLDEN_BLOCK_SWAPS.items():
        got = format_cycles(block_swap(n))
        if got != expected:
            return _failed(
                claim, None, f"block swap at n={n} is off",
                {"n": n, "expected": expected, "got": got},
            )
    for n, expected_members in _GOLDEN_FAMILIES.items():
        got_members = tuple(format_cycles(t) for t in family(n).members)
        if got_members != expected_members:
            return _failed(
                claim, None, f"family at n={n} is off",
                {"n": n, "expected": list(expected_members), "got": list(got_members)},
            )
    for n, expected_members in _GOLDEN_PRIME_FAMILIES.items():
        got_members = tuple(format_cycles(t) for t in prime_family(n))
        if got_members != expected_members:
            return _failed(
                claim, None, f"reduced family at n={n} is off",
                {"n": n, "expected": list(expected_members), "got": list(got_members)},
            )
    for n, table in _GOLDEN_INDEX_TABLES.items():
        got_table = tuple(
            (format_set_text(s), i + 1)
            for i, s in enumerate(_path_sets_in_rank_order(n))
        )
        if got_table != table:
            return _failed(
                claim, None, f"rank table at n={n} is off",
                {"n": n, "expected": list(table), "got": list(got_table)},
            )
        for text, idx in table:
            if rank(n, unrank(n, idx)) != idx:
                return _failed(
                    claim, None, "rank does not invert unrank",
                    {"n": n, "index": idx},
                )
    for n, k, text, before, after in _GOLDEN_TOGGLE_TRACES:
        members = _path_sets_in_rank_order(n)[before - 1]
        if format_set_text(members) != text:
            return _failed(
                claim, None, "trace set does not sit at its rank",
                {"n": n, "set": text, "rank": before},
            )
        got_after = rank(n, _toggle_path_members(k, members))
        t_after = generator(k, n).apply(before)
        if got_after != after or t_after != after:
            return _failed(
                claim, None, "small-size toggle trace mismatch",
                {
                    "n": n, "k": k, "set": text,
                    "expected": after, "toggled": got_after, "member": t_after,
                },
            )
    return _passed(claim, None, "block swaps, families, rank tables and traces all match")


def all_claim_ids() -> tuple[str, ...]:
    return (
        "count-transitivity",
        "coxeter-relations",
        "diagonal-generation",
        "golden-cases",
        "intertwining",
        "symmetric-generation",
        "three-cycles",
    )


def verify_all(
    max_n: int,
    profile: str = "quick",
    claims: Optional[Sequence[str]] = None,
) -> list[VerificationReport]:
    """Run every applicable verifier for each n up to max_n.

    The quick profile bounds exhaustive enumerations at f(n+2) <= 1000 and
    stabilizer chains at degree 55; the full profile raises those to 10^6
    and 377.  Checks beyond a bound report ``skipped``.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if profile not in ("quick", "full"):
        raise ValueError("profile must be 'quick' or 'full'")
    if claims is not None:
        unknown = set(claims) - set(all_claim_ids())
        if unknown:
            raise ValueError(f"unknown claim ids: {sorted(unknown)}")
    enum_cap = QUICK_ENUMERATION_CAP if profile == "quick" else FULL_ENUMERATION_CAP
    chain_cap = QUICK_CHAIN_DEGREE_CAP if profile == "quick" else FULL_CHAIN_DEGREE_CAP

    def wanted(claim_id: str) -> bool:
        return claims is None or claim_id in claims

    reports: list[VerificationReport] = []
    if wanted("golden-cases"):
        reports.append(verify_golden_cases())
    for n in range(1, max_n + 1):
        degree = fib(n + 2)
        enum_note = f"degree {degree} exceeds the {profile} enumeration bound {enum_cap}"
        chain_note = f"degree {degree} exceeds the {profile} chain bound {chain_cap}"
        if wanted("intertwining"):
            reports.append(
                verify_intertwining(n) if degree <= enum_cap
                else _skipped("intertwining", n, enum_note)
            )
        if wanted("coxeter-relations"):
            reports.append(
                verify_coxeter_relations(n) if degree <= enum_cap
                else _skipped("coxeter-relations", n, enum_note)
            )
        if wanted("count-transitivity"):
            reports.append(
                verify_count_and_transitivity(n) if degree <= enum_cap
                else _skipped("count-transitivity", n, enum_note)
            )
        if wanted("symmetric-generation"):
            reports.append(
                verify_symmetric_generation(n) if degree <= chain_cap
                else _skipped("symmetric-generation", n, chain_note)
            )
        if n >= 3 and wanted("diagonal-generation"):
            reports.append(
                verify_diagonal_generation(n) if degree <= chain_cap
                else _skipped("diagonal-generation", n, chain_note)
            )
        if n >= 4 and wanted("three-cycles"):
            reports.append(
                verify_three_cycles(n) if degree <= chain_cap
                else _skipped("three-cycles", n, chain_note)
            )
    reports.sort(key=lambda r: (r.claim_id, r.n if r.n is not None else 0))
    return reports
