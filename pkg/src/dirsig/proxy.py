"""Delegated (proxy) directed signing.

Delegation runs once, offline:

    original -> proxy   r_A = g^k
    proxy -> original   r   = g^alpha * r_A          (redrawn while r = 0 mod q)
    original -> proxy   s_A = r*x + k  mod q
    proxy               S   = s_A + alpha mod q, accepted iff g^S = y^r * r

The proxy then signs exactly like a directed signer with secret ``S``;
receivers verify against ``v_key = y_original^r * r``, which anyone can
recompute from the public delegation value ``r``.

Known weaknesses: there is no warrant, so a proxy may sign any message,
and nothing here revokes a token. A dishonest proxy can also steer the
original into signing an ``r`` of its choosing; keep the delegation
transcript as the audit record.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .directed import VerifiedEvidence, check_well_formed, masked_commitment, recover
from .errors import DelegationError, GenerationError, ProtocolOrderError, TokenError
from .keys import KeyPair, check_keypair, require_public_key
from .numtheory import RandomSource, mod_exp, random_scalar
from .params import ParamSet, require_valid

ORIGINAL, PROXY = "original", "proxy"
BLIND_RETRIES = 64


@dataclass
class DelegationSession:
    role: str
    phase: str
    original_pub: int
    original: KeyPair | None = None
    k: int | None = field(default=None, repr=False)
    alpha: int | None = field(default=None, repr=False)
    r_A: int | None = None
    r: int | None = None
    s_A: int | None = field(default=None, repr=False)


@dataclass(frozen=True)
class DelegationToken:
    r: int
    S: int = field(repr=False)
    original: int

    def verification_key(self, ps: ParamSet) -> int:
        return verification_key(ps, self.original, self.r)


@dataclass(frozen=True)
class ProxyDirectedSignature:
    S: int
    W: int
    r: int
    m: bytes
    original: int
    receiver: int
    r_deleg: int

    def verification_key(self, ps: ParamSet) -> int:
        return verification_key(ps, self.original, self.r_deleg)


def verification_key(ps: ParamSet, original_pub: int, r_deleg: int) -> int:
    # r is an exponent on the left (reduced mod q) and a multiplicand on the right
    return mod_exp(original_pub, r_deleg % ps.q, ps.p) * r_deleg % ps.p


def _expect(session: DelegationSession, role: str, phase: str, step: str) -> None:
    if session.role != role or session.phase != phase:
        raise ProtocolOrderError(f"{step} not allowed for {session.role} in phase {session.phase!r}")


def delegate_init(ps: ParamSet, original: KeyPair, rng: RandomSource) -> tuple[DelegationSession, int]:
    require_valid(ps)
    check_keypair(ps, original)
    k = random_scalar(ps.q, rng)
    r_A = mod_exp(ps.g, k, ps.p)
    return DelegationSession(ORIGINAL, "sent_rA", original.y, original, k=k, r_A=r_A), r_A


def new_proxy_session(ps: ParamSet, original_pub: int) -> DelegationSession:
    require_valid(ps)
    require_public_key(ps, original_pub, "original signer key")
    return DelegationSession(PROXY, "await_rA", original_pub)


def delegate_blind(ps: ParamSet, session: DelegationSession, r_A: int, rng: RandomSource) -> int:
    _expect(session, PROXY, "await_rA", "blind")
    if not 1 <= r_A < ps.p or (not ps.allow_invalid and mod_exp(r_A, ps.q, ps.p) != 1):
        raise DelegationError("r_A is not an element of the order-q subgroup")
    for _ in range(BLIND_RETRIES):
        alpha = random_scalar(ps.q, rng)
        r = mod_exp(ps.g, alpha, ps.p) * r_A % ps.p
        if r % ps.q:
            break
    else:
        raise GenerationError("could not find r with r mod q != 0")
    session.r_A, session.alpha, session.r = r_A, alpha, r
    session.phase = "sent_r"
    return r


def delegate_respond(ps: ParamSet, session: DelegationSession, r: int) -> int:
    _expect(session, ORIGINAL, "sent_rA", "respond")
    if not 1 <= r < ps.p or r % ps.q == 0:
        raise DelegationError("r must be a residue mod p with r mod q != 0")
    session.r = r
    session.s_A = ((r % ps.q) * session.original.x + session.k) % ps.q
    session.phase = "sent_sA"
    return session.s_A


def delegate_finish(ps: ParamSet, session: DelegationSession, s_A: int) -> DelegationToken:
    _expect(session, PROXY, "sent_r", "finish")
    S = (s_A + session.alpha) % ps.q
    if mod_exp(ps.g, S, ps.p) != verification_key(ps, session.original_pub, session.r):
        session.phase = "rejected"
        raise DelegationError("g^S != y^r * r: partial key does not match")
    session.s_A = s_A
    session.phase = "done"
    return DelegationToken(session.r, S, session.original_pub)


def check_token(ps: ParamSet, token: DelegationToken) -> None:
    if not (0 <= token.S < ps.q and 1 <= token.r < ps.p):
        raise TokenError("token fields out of range")
    if mod_exp(ps.g, token.S, ps.p) != token.verification_key(ps):
        raise TokenError("token fails g^S = y^r * r")


def proxy_directed_sign(ps: ParamSet, token: DelegationToken, receiver_pub: int, m: bytes,
                        rng: RandomSource) -> ProxyDirectedSignature:
    require_valid(ps)
    check_token(ps, token)
    require_public_key(ps, receiver_pub, "receiver key")
    m = bytes(m)
    S, W, r, _ = masked_commitment(ps, token.S, receiver_pub, m, rng)
    return ProxyDirectedSignature(S, W, r, m, token.original, receiver_pub, token.r)


def proxy_directed_verify(ps: ParamSet, receiver: KeyPair,
                          sig: ProxyDirectedSignature) -> VerifiedEvidence | None:
    check_well_formed(ps, sig.S, sig.W, sig.r)
    if not 1 <= sig.r_deleg < ps.p:
        return None
    key = sig.verification_key(ps)
    mu, Z, ok = recover(ps, receiver, key, sig.S, sig.W, sig.r, sig.m)
    return VerifiedEvidence(mu, Z, sig, key) if ok else None


@dataclass(frozen=True)
class DelegationTranscript:
    """Public moves of one delegation run; later fields None until sent."""

    r_A: int
    r: int | None = None
    s_A: int | None = None
    verdict: str | None = None


def run_delegation(ps: ParamSet, original: KeyPair, original_rng: RandomSource,
                   proxy_rng: RandomSource) -> tuple[DelegationToken, DelegationTranscript]:
    osess, r_A = delegate_init(ps, original, original_rng)
    psess = new_proxy_session(ps, original.y)
    r = delegate_blind(ps, psess, r_A, proxy_rng)
    s_A = delegate_respond(ps, osess, r)
    token = delegate_finish(ps, psess, s_A)
    return token, DelegationTranscript(r_A, r, s_A, "accept")
