"""Seeded random polynomials and ideals for the property suites."""

from typing import List, Tuple

import numpy as np

from idealpow.groebner import Ideal
from idealpow.poly import Exponents, Poly, Ring


def random_partition(rng: np.random.Generator, n: int, k: int) -> Exponents:
    """Bars and stars: a uniformly random exponent vector of length k and degree n."""
    if k == 1:
        return (n,)
    bars = np.sort(rng.choice(n + k - 1, k - 1, replace=False))
    counts = np.diff(np.concatenate(([-1], bars, [n + k - 1]))) - 1
    return tuple(int(c) for c in counts)


def random_coefficient(rng: np.random.Generator, ring: Ring, nonzero: bool = True) -> int:
    p = ring.field.characteristic
    if p:
        return int(rng.integers(1 if nonzero else 0, p))
    c = int(rng.integers(-5, 6))
    while nonzero and c == 0:
        c = int(rng.integers(-5, 6))
    return c


def random_polynomial(
    rng: np.random.Generator,
    ring: Ring,
    degree: int,
    terms: int,
    homogeneous: bool = False,
    min_degree: int = 1,
) -> Poly:
    """Sum of ``terms`` random terms of degree in [min_degree, degree]; never zero."""
    n = ring.ngens
    while True:
        acc = {}
        for _ in range(terms):
            d = degree if homogeneous else int(rng.integers(min_degree, degree + 1))
            acc[random_partition(rng, d, n)] = random_coefficient(rng, ring)
        f = ring.from_dict(acc)
        if f:
            return f


def random_ideal(
    rng: np.random.Generator,
    ring: Ring,
    size: int,
    degree: int,
    terms: int = 2,
    homogeneous: bool = False,
) -> Ideal:
    return Ideal(ring, [random_polynomial(rng, ring, degree, terms, homogeneous) for _ in range(size)])


def random_monomial_ideal(rng: np.random.Generator, ring: Ring, size: int, degree: int) -> Ideal:
    gens = []
    for _ in range(size):
        d = int(rng.integers(1, degree + 1))
        gens.append(ring.term(random_partition(rng, d, ring.ngens)))
    return Ideal(ring, gens)


def random_coprime_pair(rng: np.random.Generator, ring: Ring, max_degree: int = 3) -> Tuple[Poly, Poly]:
    """f, g in two variables whose leading forms are powers of independent linear forms."""
    x, y = ring.gens()[:2]
    while True:
        a, b, c, d = (random_coefficient(rng, ring, nonzero=False) for _ in range(4))
        if ring.constant(a * d - b * c):
            break
    first, second = ring.constant(a) * x + ring.constant(b) * y, ring.constant(c) * x + ring.constant(d) * y
    pair: List[Poly] = []
    for form in (first, second):
        e = int(rng.integers(1, max_degree))
        tail = random_polynomial(rng, ring, e + 2, 2, min_degree=e + 1)
        pair.append(form ** e + tail)
    return pair[0], pair[1]
