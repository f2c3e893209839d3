"""Plain Schnorr signatures, the baseline the directed scheme extends.

Challenge: ``r = h(g^k mod p, m)``; response ``s = k - x*r mod q``.
Verification recomputes the commitment as ``g^s * y^r``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .keys import KeyPair, check_keypair, validate_public_key
from .numtheory import RandomSource, mod_exp, random_scalar
from .params import ParamSet, hash_items, require_valid


@dataclass(frozen=True)
class SchnorrSignature:
    r: int
    s: int
    m: bytes


def schnorr_sign(ps: ParamSet, signer: KeyPair, m: bytes, rng: RandomSource) -> SchnorrSignature:
    require_valid(ps)
    check_keypair(ps, signer)
    k = random_scalar(ps.q, rng)
    r = hash_items(ps, (mod_exp(ps.g, k, ps.p), bytes(m)))
    s = (k - signer.x * r) % ps.q
    return SchnorrSignature(r, s, bytes(m))


def schnorr_verify(ps: ParamSet, y: int, sig: SchnorrSignature) -> bool:
    if not validate_public_key(ps, y):
        return False
    if not (0 <= sig.r < ps.q and 0 <= sig.s < ps.q):
        return False
    commitment = mod_exp(ps.g, sig.s, ps.p) * mod_exp(y, sig.r, ps.p) % ps.p
    return hash_items(ps, (commitment, sig.m)) == sig.r
