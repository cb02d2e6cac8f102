"""Shared test helpers: brute-force oracles kept independent of the library
internals they check."""

from __future__ import annotations

import random

from togglegroup import Permutation


def brute_force_closure(generators, cap=10**6):
    """All products of the generators, by breadth-first closure.

    In a finite group closure under right multiplication by generators
    already yields the generated subgroup (inverses are powers).  Raises
    if the closure exceeds ``cap`` elements.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    ident = Permutation.identity(gens[0].degree)
    seen = {ident}
    queue = [ident]
    while queue:
        x = queue.pop()
        for s in gens:
            y = x * s
            if y not in seen:
                if len(seen) >= cap:
                    raise RuntimeError(f"closure exceeded {cap} elements")
                seen.add(y)
                queue.append(y)
    return seen


def random_permutation(rng: random.Random, degree: int) -> Permutation:
    images = list(range(1, degree + 1))
    rng.shuffle(images)
    return Permutation(images)
