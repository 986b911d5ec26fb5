"""Sidon sets: integer sets whose pairwise differences are all distinct.

The indicator vector of a Sidon set, read mod k, yields a circulant matrix
whose columns pairwise share at most 2 support positions. That overlap bound
is what the double-circulant construction in design_dc feeds on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import is_prime


@dataclass(frozen=True)
class SidonSet:
    """Strictly increasing non-negative ints below bound, all pairwise
    differences distinct. The Sidon property is verified at construction."""

    elements: tuple[int, ...]
    bound: int

    def __post_init__(self) -> None:
        e = self.elements
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            raise ValueError("elements must be strictly increasing")
        if e and (e[0] < 0 or e[-1] >= self.bound):
            raise ValueError(f"elements must lie in [0, {self.bound})")
        if not verify_sidon(e):
            raise ValueError("not a Sidon set: repeated pairwise difference")

    def __len__(self) -> int:
        return len(self.elements)


def verify_sidon(elements) -> bool:
    """Brute-force check that all differences a - b (a != b) are distinct.

    Empty and singleton sets pass vacuously.
    """
    seen = set()
    for a in elements:
        for b in elements:
            if a == b:
                continue
            d = a - b
            if d in seen:
                return False
            seen.add(d)
    return True


def sidon_erdos_turan(p: int) -> SidonSet:
    """The p-element Sidon set {2*p*i + (i*i mod p) : 0 <= i < p} in [0, 2p^2).

    p must be prime. The construction is re-verified before returning, so a
    bad input can never yield an unchecked set.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    elements = tuple(2 * p * i + (i * i) % p for i in range(p))
    return SidonSet(elements, 2 * p * p)


def sidon_for_length(k: int) -> SidonSet:
    """Largest-p instance of sidon_erdos_turan that fits in [0, k).

    Requires k >= 8 so that at least p = 2 fits. The returned set keeps its
    natural bound 2p^2 <= k; all elements are below k.
    """
    if k < 8:
        raise ValueError(f"k must be at least 8, got {k}")
    best = 2
    p = 3
    while 2 * p * p <= k:
        best = p
        p += 1
        while not is_prime(p):
            p += 1
    return sidon_erdos_turan(best)
