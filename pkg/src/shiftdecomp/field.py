"""Prime-field contexts and multiplicative subgroups with exact arithmetic tables."""

from __future__ import annotations

from .errors import (
    NotADivisorError,
    NotPrimeError,
    OutOfRangeError,
    ZeroDivisorError,
    ZeroElementError,
)
from .sets import ElementSet

MAX_PRIME = 1 << 20

# deterministic witness set, exact for all n < 3.3 * 10^24
_MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MILLER_RABIN_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _smallest_primitive_root(p: int) -> int:
    if p == 3:
        return 2
    exponents = [(p - 1) // q for q in _prime_factors(p - 1)]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in exponents):
            return g
    raise AssertionError(f"no primitive root found for {p}")  # unreachable for prime p


class FieldContext:
    """Immutable F_p arithmetic context with inverse and factorial tables."""

    __slots__ = ("p", "primitive_root", "inv_table", "factorial", "inv_factorial")

    def __init__(self, p: int):
        # callers go through make_field, which validates p
        self.p = p
        inv = [0] * p
        inv[1] = 1
        for x in range(2, p):
            inv[x] = (p - (p // x) * inv[p % x]) % p
        fact = [1] * p
        for k in range(1, p):
            fact[k] = fact[k - 1] * k % p
        inv_fact = [1] * p
        inv_fact[p - 1] = pow(fact[p - 1], p - 2, p)
        for k in range(p - 1, 0, -1):
            inv_fact[k - 1] = inv_fact[k] * k % p
        self.inv_table = tuple(inv)
        self.factorial = tuple(fact)
        self.inv_factorial = tuple(inv_fact)
        self.primitive_root = _smallest_primitive_root(p)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisorError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero residue."""
        a %= self.p
        if a == 0:
            raise ZeroDivisorError("0 has no multiplicative order")
        order = self.p - 1
        for q in _prime_factors(self.p - 1):
            while order % q == 0 and pow(a, order // q, self.p) == 1:
                order //= q
        return order

    def binomial(self, n: int, k: int) -> int:
        """C(n, k) mod p via factorial tables, with Lucas digits once n reaches p."""
        if k < 0 or k > n:
            return 0
        p = self.p
        if n < p:
            return self.factorial[n] * self.inv_factorial[k] % p * self.inv_factorial[n - k] % p
        result = 1
        while n or k:
            ni, ki = n % p, k % p
            if ki > ni:
                return 0
            result = (
                result
                * self.factorial[ni]
                % p
                * self.inv_factorial[ki]
                % p
                * self.inv_factorial[ni - ki]
                % p
            )
            n //= p
            k //= p
        return result

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p})"


def make_field(p: int, *, max_prime: int = MAX_PRIME) -> FieldContext:
    """Validated context for the prime field F_p, 3 <= p <= max_prime."""
    if p < 3 or p > max_prime:
        raise OutOfRangeError(f"p must lie in [3, {max_prime}], got {p}")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is composite")
    return FieldContext(p)


class MultSubgroup:
    """The unique multiplicative subgroup of F_p^* of a given order."""

    __slots__ = ("ctx", "order", "index", "generator", "elements")

    def __init__(self, ctx: FieldContext, order: int, generator: int, elements: ElementSet):
        self.ctx = ctx
        self.order = order
        self.index = (ctx.p - 1) // order
        self.generator = generator
        self.elements = elements

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultSubgroup)
            and self.ctx.p == other.ctx.p
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.order))

    def __repr__(self) -> str:
        return f"MultSubgroup(p={self.ctx.p}, order={self.order})"


def subgroup_of_order(ctx: FieldContext, d: int) -> MultSubgroup:
    """Subgroup of order d; d must divide p - 1."""
    if d < 1 or (ctx.p - 1) % d != 0:
        raise NotADivisorError(f"{d} does not divide {ctx.p - 1}")
    gen = pow(ctx.primitive_root, (ctx.p - 1) // d, ctx.p)
    mask = 0
    x = 1
    for _ in range(d):
        mask |= 1 << x
        x = x * gen % ctx.p
    return MultSubgroup(ctx, d, gen, ElementSet(ctx.p, mask))


def enumerate_proper_subgroups(ctx: FieldContext) -> list[MultSubgroup]:
    """All subgroups of order < p - 1, ascending by order."""
    n = ctx.p - 1
    orders = sorted(d for d in range(1, n) if n % d == 0)
    return [subgroup_of_order(ctx, d) for d in orders]


def coset_test(ctx: FieldContext, a_set: ElementSet) -> tuple[int, int] | None:
    """Return (order, representative) when a_set is a coset of a subgroup, else None.

    The representative is the smallest element of the set.
    """
    if len(a_set) == 0:
        raise ValueError("coset test needs a nonempty set")
    if 0 in a_set:
        raise ZeroElementError("cosets of multiplicative subgroups avoid 0")
    d = len(a_set)
    if (ctx.p - 1) % d != 0:
        return None
    rep = next(iter(a_set))
    rep_inv = ctx.inv_table[rep]
    scaled = ElementSet.from_elements(ctx.p, (x * rep_inv for x in a_set))
    if scaled == subgroup_of_order(ctx, d).elements:
        return (d, rep)
    return None
