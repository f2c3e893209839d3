"""Directed signatures over a prime-order subgroup of Z_p*.

Receiver-gated verification, an interactive confirmation protocol for
third parties, proxy (delegated) directed signing, and a registration
workflow built on top. Arithmetic is not constant-time: this package is
for protocol correctness work, not for protecting real secrets.
"""

from .confirm import run_confirmation
from .directed import DirectedSignature, DisclosurePackage, VerifiedEvidence, build_disclosure, directed_sign, directed_verify
from .keys import KeyPair, PublicKey, keygen, validate_public_key
from .numtheory import ScriptedScalars, seeded_rng, system_rng
from .params import HashSpec, ParamSet, generate_params, hash_to_zq, validate_params
from .proxy import ProxyDirectedSignature, proxy_directed_sign, proxy_directed_verify, run_delegation
from .schnorr import SchnorrSignature, schnorr_sign, schnorr_verify

__version__ = "0.1.0"
