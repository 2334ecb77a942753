"""Closed-form values of classical functors, used as golden references.

Groups are handled through their cyclic decomposition A = ⊕ Z/d_i with
d_i = 0 standing for a free summand. Every formula here is independent of
the simplicial and Koszul machinery it is compared against.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, gcd

from .zlinalg import FgAbGroup

ZERO = FgAbGroup()


def _g(orders) -> FgAbGroup:
    return FgAbGroup.from_orders(list(orders))


def _tor_cyclic(a: int, b: int) -> int:
    """Order of Tor(Z/a, Z/b) as a cyclic order (1 = trivial)."""
    if a == 0 or b == 0:
        return 1
    return gcd(a, b)


def tensor_cyclic(a: int, b: int) -> int:
    """Z/a (x) Z/b = Z/gcd(a, b), with gcd(0, 0) = 0 meaning Z."""
    return gcd(a, b)


def p_part(r: int, n: int) -> int:
    """(r, n^∞): the largest divisor of r built from primes dividing n."""
    out = 1
    for p in range(2, r + 1):
        if r % p == 0 and n % p == 0 and all(p % q for q in range(2, p)):
            while r % (out * p) == 0:
                out *= p
    return out


def gamma_cyclic(r: int, n: int) -> FgAbGroup:
    """Γ_r(Z/n) = Z/(n (r, n^∞)); Γ_r(Z) = Z."""
    if n == 0:
        return FgAbGroup.free(1)
    return FgAbGroup.cyclic(n * p_part(r, n))


def mod(a: FgAbGroup, m: int) -> FgAbGroup:
    return _g(tensor_cyclic(d, m) for d in a.cyclic_orders())


def tor(a: FgAbGroup, m: int) -> FgAbGroup:
    return _g(_tor_cyclic(d, m) for d in a.cyclic_orders())


def exterior_square(a: FgAbGroup) -> FgAbGroup:
    return _g(tensor_cyclic(x, y) for x, y in combinations(a.cyclic_orders(), 2))


def symmetric_square(a: FgAbGroup) -> FgAbGroup:
    ds = a.cyclic_orders()
    return _g(list(ds) + [tensor_cyclic(x, y) for x, y in combinations(ds, 2)])


def gamma2(a: FgAbGroup) -> FgAbGroup:
    ds = a.cyclic_orders()
    diag = [0 if d == 0 else d * p_part(2, d) for d in ds]
    return _g(diag + [tensor_cyclic(x, y) for x, y in combinations(ds, 2)])


def lambda2_bar(a: FgAbGroup) -> FgAbGroup:
    """λ²(A) = Λ²(A) ⊕ Tor(A, Z/2)."""
    return exterior_square(a) + tor(a, 2)


def s2(a: FgAbGroup) -> FgAbGroup:
    """L_1 SP²(A): Tor between distinct cyclic summands."""
    return _g(_tor_cyclic(x, y) for x, y in combinations(a.cyclic_orders(), 2))


def omega2(a: FgAbGroup) -> FgAbGroup:
    """L_1 Λ²(A): the torsion of A plus Tor between distinct summands."""
    ds = a.cyclic_orders()
    return _g([d if d else 1 for d in ds] + [_tor_cyclic(x, y) for x, y in combinations(ds, 2)])


def r2(a: FgAbGroup) -> FgAbGroup:
    """L_1 Γ₂(A): Tor(A, Z/2) plus Tor between distinct summands."""
    ds = a.cyclic_orders()
    return tor(a, 2) + _g(_tor_cyclic(x, y) for x, y in combinations(ds, 2))


def _ladder_range(n: int) -> range:
    return range(0, (n - 1) // 2 + 1)


def derived_sp2(a: FgAbGroup, n: int, i: int) -> FgAbGroup:
    """L_i SP²(A, n)."""
    out = ZERO
    if n == 0:
        if i == 0:
            out += symmetric_square(a)
        if i == 1:
            out += s2(a)
        return out
    if n == 1 and i == 2:
        out += exterior_square(a)
    for t in _ladder_range(n):
        if t == 0:
            continue
        if i == n + 2 * t:
            out += mod(a, 2)
        if i == n + 2 * t + 1 and i != 2 * n:
            out += tor(a, 2)
    if i == 2 * n:
        if n % 2 == 0:
            out += gamma2(a)
        elif n != 1:
            out += lambda2_bar(a)
    if i == 2 * n + 1:
        out += r2(a) if n % 2 == 0 else omega2(a)
    return out


def derived_lambda2(a: FgAbGroup, n: int, i: int) -> FgAbGroup:
    """L_i Λ²(A, n)."""
    out = ZERO
    if n == 0 and i == 0:
        out += exterior_square(a)
    for t in _ladder_range(n):
        if i == n + 1 + 2 * t and i != 2 * n:
            out += mod(a, 2)
        if t >= 1 and i == n + 2 * t:
            out += tor(a, 2)
    if i == 2 * n:
        if n % 2 == 1:
            out += gamma2(a)
        elif n != 0:
            out += lambda2_bar(a)
    if i == 2 * n + 1:
        out += r2(a) if n % 2 == 1 else omega2(a)
    return out


def derived_gamma2(a: FgAbGroup, n: int, i: int) -> FgAbGroup:
    """L_i Γ₂(A, n)."""
    out = ZERO
    if n > 0:
        for t in _ladder_range(n):
            if i == n + 2 * t:
                out += mod(a, 2)
            if i == n + 1 + 2 * t and i != 2 * n:
                out += tor(a, 2)
    if i == 2 * n:
        out += gamma2(a) if n % 2 == 0 else lambda2_bar(a)
    if i == 2 * n + 1:
        out += r2(a) if n % 2 == 0 else omega2(a)
    return out


QUADRATIC = {"SP": derived_sp2, "L": derived_lambda2, "G": derived_gamma2}


def sp3_shift3(a: FgAbGroup, i: int) -> FgAbGroup | None:
    """L_7 and L_8 of SP³(A, 3); None outside those degrees."""
    if i == 7:
        return mod(a, 3)
    if i == 8:
        return a.tensor(a).tensor(FgAbGroup.cyclic(2)) + tor(a, 3)
    return None


def exterior_power_mod_p(r: int, k: int, p: int) -> FgAbGroup:
    """Λ^k((Z/p)^r)."""
    return FgAbGroup.from_orders([p] * comb(r, k))


def lie3_mod2_rank(r: int) -> int:
    """Dimension of 𝓛³((Z/2)^r) = 𝓛³(Z^r) ⊗ Z/2."""
    return r * comb(r + 1, 2) - comb(r + 2, 3)


def gamma_mod_p(r: int, k: int, p: int) -> FgAbGroup:
    """Γ_k((Z/p)^r) as a sum over the compositions of k into r parts."""
    orders: list[int] = []

    def rec(slot: int, left: int, acc: list[FgAbGroup]):
        if slot == r - 1:
            parts = acc + [gamma_cyclic(left, p) if left else FgAbGroup.free(1)]
            total = parts[0]
            for g in parts[1:]:
                total = total.tensor(g)
            orders.extend(total.cyclic_orders())
            return
        for x in range(left + 1):
            rec(slot + 1, left - x, acc + [gamma_cyclic(x, p) if x else FgAbGroup.free(1)])

    if r == 0:
        return FgAbGroup.free(1) if k == 0 else ZERO
    rec(0, k, [])
    return FgAbGroup.from_orders(orders)


def dual_derham_free(n: int, r: int, i: int) -> FgAbGroup | None:
    """H_i C^n(Z^r) for n <= 7 from the known table; None where no closed form is recorded."""
    z2, z3 = 2, 3
    if n == 1:
        return ZERO
    if n in (2, 3, 5, 7):
        return FgAbGroup.from_orders([n] * r) if i == 0 else ZERO
    if n == 4:
        return {0: gamma_mod_p(r, 2, z2), 1: exterior_power_mod_p(r, 2, z2)}.get(i, ZERO)
    if n == 6:
        if i == 0:
            return gamma_mod_p(r, 2, z3) + gamma_mod_p(r, 3, z2)
        if i == 1:
            return exterior_power_mod_p(r, 2, z3) + FgAbGroup.from_orders([2] * lie3_mod2_rank(r))
        if i == 2:
            return exterior_power_mod_p(r, 3, z2)
        return ZERO
    return None


def dual_derham_h0(n: int, r: int) -> FgAbGroup:
    """H_0 C^n(Z^r) = ⊕_{p | n prime} Γ_{n/p}((Z/p)^r)."""
    out = ZERO
    for p in range(2, n + 1):
        if n % p == 0 and all(p % q for q in range(2, p)):
            out += gamma_mod_p(r, n // p, p)
    return out
