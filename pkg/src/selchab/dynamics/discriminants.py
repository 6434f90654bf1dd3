"""Discriminants of a_n against published factorizations."""

from __future__ import annotations

import json
from importlib import resources
from math import prod

import gmpy2

from .. import polyz
from .iterates import iter_poly

PRIME_ROUNDS = 64  # Miller-Rabin error below 4^-64 = 2^-128


def is_probable_prime(n: int) -> bool:
    return bool(gmpy2.is_prime(n, PRIME_ROUNDS))


def published_factors(name: str) -> list[int]:
    data = json.loads(resources.files("selchab.data").joinpath("curves.json").read_text())
    return [int(x) for x in data[name]["discriminant_factors"]]


def discriminant_check(n: int, factors=None) -> dict:
    """Compare disc(a_n) with a list of claimed prime factors.

    The factor list determines |disc|; the sign is (-1)^r2 and is reported
    separately.
    """
    f = list(iter_poly("a", n).poly)
    disc = polyz.discriminant(f)
    factors = published_factors(f"a{n}") if factors is None else [int(x) for x in factors]
    primes = [is_probable_prime(p) for p in factors]
    return {
        "n": n,
        "discriminant": disc,
        "factors": factors,
        "sign": -1 if disc < 0 else 1,
        "product_matches": prod(factors) == abs(disc),
        "all_prime": all(primes),
        "pairwise_distinct": len(set(factors)) == len(factors),
        "squarefree": prod(factors) == abs(disc) and all(primes) and len(set(factors)) == len(factors),
    }
