"""Modular arithmetic, primality testing and scalar sampling.

Nothing here is constant-time. The package checks protocol correctness;
do not use it to protect real secrets.
"""

from __future__ import annotations

import random
import secrets
from collections import deque
from typing import Iterable, Protocol

from .errors import EntropyError, InvalidModulusError, NoInverseError

TRIAL_DIVISION_LIMIT = 1 << 16
DEFAULT_MR_ROUNDS = 40


class RandomSource(Protocol):
    def randrange(self, start: int, stop: int) -> int: ...


def system_rng() -> RandomSource:
    return secrets.SystemRandom()


def seeded_rng(seed: int) -> RandomSource:
    return random.Random(seed)


class ScriptedScalars:
    """Randomness source that replays a fixed list of values.

    Test hook for reproducing known vectors: each ``randrange``
    call pops the next value *as given*, without range reduction, so that
    exponents like ``u = 13`` with ``q = 11`` survive into transcripts.
    Once the script runs dry, draws go to ``fallback`` if one is set.
    """

    def __init__(self, values: Iterable[int], fallback: RandomSource | None = None):
        self._values = deque(int(v) for v in values)
        self._fallback = fallback

    @property
    def remaining(self) -> int:
        return len(self._values)

    def randrange(self, start: int, stop: int) -> int:
        if self._values:
            return self._values.popleft()
        if self._fallback is None:
            raise EntropyError("scripted randomness exhausted")
        return self._fallback.randrange(start, stop)


def mod_exp(base: int, exponent: int, modulus: int) -> int:
    if modulus < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {modulus}")
    return pow(base, exponent, modulus)


def mod_inverse(a: int, modulus: int) -> int:
    if modulus < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {modulus}")
    try:
        return pow(a, -1, modulus)
    except ValueError:
        raise NoInverseError(f"{a} is not invertible mod {modulus}") from None


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    return [i for i, flag in enumerate(sieve) if flag]


SMALL_PRIMES = _small_primes(TRIAL_DIVISION_LIMIT)
_SMALL_PRIME_SET = frozenset(SMALL_PRIMES)
# Primes used as a cheap prefilter before Miller-Rabin on large candidates.
_SIEVE_PRIMES = SMALL_PRIMES[:2000]


def is_probable_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS, rng: RandomSource | None = None) -> bool:
    """Primality test: exact below 2**16, Miller-Rabin above.

    The false-positive probability for composite ``n`` is at most
    ``4 ** -rounds``.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    if n < TRIAL_DIVISION_LIMIT:
        return n in _SMALL_PRIME_SET
    for p in _SIEVE_PRIMES:
        if n % p == 0:
            return False
    rng = rng or system_rng()
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_scalar(q: int, rng: RandomSource) -> int:
    """Uniform draw from [1, q-1]; zero is never returned by a real source."""
    if q < 3:
        raise ValueError(f"q must be >= 3, got {q}")
    try:
        return rng.randrange(1, q)
    except EntropyError:
        raise
    except Exception as exc:  # noqa: BLE001 - any rng failure is an entropy failure
        raise EntropyError(f"randomness source failed: {exc}") from exc
