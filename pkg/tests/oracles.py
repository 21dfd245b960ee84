"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately naive: exhaustive search, character
sums, and pure-Python loops, kept separate from the library code paths
they check.
"""

from __future__ import annotations

from math import cos, gcd, pi

from modcat.fusion import FusionRing


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def quadratic_residues(p: int) -> set[int]:
    """Nonzero squares modulo p by enumeration."""
    return {x * x % p for x in range(1, p)} - {0}


def sqrt_by_search(a: int, modulus: int) -> int | None:
    for j in range(modulus):
        if j * j % modulus == a % modulus:
            return j
    return None


def equivalent_by_unit_search(n: int, k1: int, k2: int) -> bool:
    """Exists a unit j with k1 = k2 j^2 (mod n)?"""
    if n == 1:
        return True
    return any(
        (k2 * j * j - k1) % n == 0 for j in range(1, n) if gcd(j, n) == 1
    )


def associativity_violations(ring: FusionRing) -> list[tuple[int, int, int, int]]:
    """Pure-Python quadruple-loop associativity check over present entries."""
    r = ring.rank
    bad = []
    for i in range(r):
        for j in range(r):
            ij = ring.fuse(i, j)
            for k in range(r):
                lhs: dict[int, int] = {}
                for m, c1 in ij.items():
                    for l, c2 in ring.fuse(m, k).items():
                        lhs[l] = lhs.get(l, 0) + c1 * c2
                rhs: dict[int, int] = {}
                for m, c1 in ring.fuse(j, k).items():
                    for l, c2 in ring.fuse(i, m).items():
                        rhs[l] = rhs.get(l, 0) + c1 * c2
                for l in set(lhs) | set(rhs):
                    if lhs.get(l, 0) != rhs.get(l, 0):
                        bad.append((i, j, k, l))
    return bad


def dihedral_character_coeffs(n: int) -> dict[tuple[int, int, int], int]:
    """Fusion coefficients of the order-2n dihedral group's character ring,
    derived from character inner products (n odd).

    Irreducible characters: trivial, sign, and (n-1)/2 two-dimensional ones
    with chi_h(rotation^t) = 2 cos(2 pi h t / n) and 0 on reflections.
    Index order matches dihedral_fusion: 0 trivial, 1 sign, 1+h the h-th
    two-dimensional character.
    """
    half = (n - 1) // 2
    rank = 2 + half

    def char(idx: int, t: int | None) -> float:
        # t is the rotation exponent; None means a reflection.
        if idx == 0:
            return 1.0
        if idx == 1:
            return 1.0 if t is not None else -1.0
        h = idx - 1
        return 2.0 * cos(2 * pi * h * t / n) if t is not None else 0.0

    coeffs = {}
    for i in range(rank):
        for j in range(rank):
            for k in range(rank):
                total = sum(char(i, t) * char(j, t) * char(k, t) for t in range(n))
                total += n * char(i, None) * char(j, None) * char(k, None)
                mult = round(total / (2 * n))
                assert abs(total / (2 * n) - mult) < 1e-9
                if mult:
                    coeffs[(i, j, k)] = mult
    return coeffs


def fp_identity_residual(ring: FusionRing, dims: list[float]) -> float:
    """Max violation of d_i d_j = sum_k N_ij^k d_k over all pairs."""
    worst = 0.0
    for i in range(ring.rank):
        for j in range(ring.rank):
            rhs = sum(m * dims[k] for k, m in ring.fuse(i, j).items())
            worst = max(worst, abs(dims[i] * dims[j] - rhs))
    return worst
