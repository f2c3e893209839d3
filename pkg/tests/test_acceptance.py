"""Acceptance criteria 1-7. Each test is tagged with its criterion number and
the terminal summary prints one PASS/FAIL line per criterion."""

import random
import time
from dataclasses import replace

import pytest

from dirsig import confirm, wire
from dirsig.confirm import precheck, run_confirmation
from dirsig.directed import build_disclosure, directed_sign, directed_verify, masked_commitment
from dirsig.errors import DelegationError, DirsigError, FormatError, ProtocolAbort
from dirsig.keys import KeyPair, keygen
from dirsig.numtheory import ScriptedScalars
from dirsig.params import ParamSet, generate_params, validate_params
from dirsig.proxy import (ProxyDirectedSignature, delegate_blind, delegate_finish, delegate_init,
                          delegate_respond, new_proxy_session, proxy_directed_sign,
                          proxy_directed_verify, run_delegation)
from dirsig.registration import allocate, holder_verify, prove_to_authority
from dirsig.schnorr import schnorr_sign, schnorr_verify
from samples import every_object
from test_cli import load_script
from test_wire import fuzz_decoders
from vectors import DELEG_MSG, REG_MSG, deleg_params, forced_key, reg_params_replay

# every object built by criteria 1-6, for the round-trip check in criterion 7
PRODUCED: list[tuple[ParamSet, object]] = []


def keep(ps, *objs):
    PRODUCED.extend((ps, o) for o in objs)
    return objs[0] if len(objs) == 1 else objs


def report(n, ok, detail):
    print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")


# -- 1: delegation and proxy directed signature vectors ----------------------

@pytest.mark.criterion(1)
def test_criterion_1_delegation_vectors(tmp_path):
    start = time.perf_counter()
    ps = deleg_params()
    a, b, c, y = (forced_key(ps, o, x) for o, x in (("A", 3), ("B", 5), ("C", 6), ("Y", 8)))
    assert (a.y, b.y, c.y, y.y) == (9, 2, 12, 18)
    osess, r_A = delegate_init(ps, a, ScriptedScalars([7]))
    psess = new_proxy_session(ps, a.y)
    r = delegate_blind(ps, psess, r_A, ScriptedScalars([5]))
    s_A = delegate_respond(ps, osess, r)
    token = delegate_finish(ps, psess, s_A)
    assert (r_A, r, s_A, token.S) == (3, 6, 3, 8)
    assert pow(6, 8, 23) == 18 == pow(9, 6, 23) * 6 % 23 == token.verification_key(ps)

    sig = proxy_directed_sign(ps, token, c.y, DELEG_MSG, ScriptedScalars([7, 2]))
    assert (sig.S, sig.W, sig.r) == (8, 2, 2)
    ev = proxy_directed_verify(ps, c, sig)
    assert (ev.mu, ev.Z) == (3, 16)
    keep(ps, a, token, sig, ev, build_disclosure(ev))

    out = tmp_path / "cli"
    load_script("scenario_delegation").main(out)
    assert (out / "deleg.txt").read_text() == (
        "dirsig-deleg v1\nmove-1 rA=3\nmove-2 r=6\nmove-3 sA=3\nverdict accept\n")
    assert (out / "B.token").read_bytes() == wire.encode(token)
    assert (out / "proxysig.txt").read_bytes() == wire.encode(sig)
    assert (out / "evidence.txt").read_bytes() == wire.encode(ev)
    assert "\nmu = 3\nZ = 16\n" in (out / "package.txt").read_text()
    elapsed = time.perf_counter() - start
    report(1, elapsed < 1, f"r_A=3 r=6 s_A=3 S=8 W=2 S_B=8 mu=3 Z=16 in {elapsed:.3f}s")
    assert elapsed < 1


# -- 2: confirmation vectors -------------------------------------------------

@pytest.mark.criterion(2)
def test_criterion_2_confirmation_vectors():
    start = time.perf_counter()
    ps = deleg_params()
    c = forced_key(ps, "C", 6)
    pkg = confirm.DisclosurePackage(8, 2, 2, DELEG_MSG, 18, 12, 3, 16)
    precheck(ps, pkg)
    t = run_confirmation(ps, c, pkg, ScriptedScalars([13, 15]), ScriptedScalars([8]))
    assert (t.w, t.beta, t.gamma, t.u, t.v, t.alpha, t.verdict) == (3, 8, 13, 13, 15, 8, "accept")
    # the reference pair (16, 4) cannot follow from w=3, alpha=8:
    # beta = w * g^alpha = 3 * 18 = 8 and gamma = beta^x_C = 8^6 = 13
    assert 3 * pow(6, 8, 23) % 23 == 8 != 16 and pow(8, 6, 23) == 13 != 4
    for beta, gamma in ((16, 4), (16, 13), (8, 4)):
        vstate, _ = confirm.verifier_start(ps, pkg, ScriptedScalars([13, 15]))
        confirm.verifier_reveal(vstate, beta, gamma)
        assert not confirm.verifier_finish(vstate, pkg, 8)
    assert confirm.replay(ps, pkg, t)
    keep(ps, t, pkg)
    elapsed = time.perf_counter() - start
    report(2, elapsed < 1, f"w=3 beta=8 gamma=13 accepted; (16, 4) rejected, in {elapsed:.3f}s")
    assert elapsed < 1


# -- 3: registration vectors -------------------------------------------------

@pytest.mark.criterion(3)
def test_criterion_3_registration_vectors():
    start = time.perf_counter()
    bad = validate_params(ParamSet(23, 11, 5))
    assert not bad.valid and pow(5, 11, 23) == 22
    assert any("g^q ≠ 1" in reason for reason in bad.reasons)
    assert str(bad).rstrip().endswith("INVALID")

    ps = reg_params_replay()
    y, c = forced_key(ps, "Y", 5), forced_key(ps, "C", 8)
    assert (y.y, c.y) == (20, 16)
    cred = allocate(ps, y, c.y, REG_MSG, ScriptedScalars([7, 4]))
    assert (cred.sig.W, cred.sig.S, cred.sig.r) == (10, 5, 2)
    ev = holder_verify(ps, c, cred)
    # Z = y_C^K1 = 16^7 = 18; a value of 1 would need K1 = 0
    assert (ev.mu, ev.Z) == (6, 18) == (ev.mu, pow(16, 7, 23)) and ev.Z != 1
    pkg = prove_to_authority(ps, c, ev, cred).package
    precheck(ps, pkg)

    fixed = ParamSet(23, 11, 6)
    assert validate_params(fixed).valid
    y6, c6 = forced_key(fixed, "Y", 5), forced_key(fixed, "C", 8)
    cred6 = allocate(fixed, y6, c6.y, REG_MSG, ScriptedScalars([7, 4]))
    ev6 = holder_verify(fixed, c6, cred6)
    assert ev6 is not None
    pair = prove_to_authority(fixed, c6, ev6, cred6)
    t = pair.run(random.Random(3), random.Random(4))
    assert t.verdict == "accept"
    keep(fixed, cred6, ev6, pair.package, t, y6)
    elapsed = time.perf_counter() - start
    report(3, elapsed < 1, f"g=5 INVALID, replay W=10 Z=18 S=5 mu=6, g=6 rerun accepts, in {elapsed:.3f}s")
    assert elapsed < 1


# -- 4: completeness ---------------------------------------------------------

def completeness_run(ps, n, rng):
    counts = dict.fromkeys(("schnorr", "directed", "proxy", "confirm"), 0)
    for i in range(n):
        a, b, c = (keygen(ps, rng, o) for o in "ABC")
        m = rng.randbytes(rng.randrange(0, 33))
        s = schnorr_sign(ps, a, m, rng)
        counts["schnorr"] += schnorr_verify(ps, a.y, s)
        sig = directed_sign(ps, a, c.y, m, rng)
        ev = directed_verify(ps, c, a.y, sig)
        counts["directed"] += ev is not None
        token, dt = run_delegation(ps, a, rng, rng)
        psig = proxy_directed_sign(ps, token, c.y, m, rng)
        pev = proxy_directed_verify(ps, c, psig)
        counts["proxy"] += pev is not None
        src = ev if i % 2 else pev
        t = run_confirmation(ps, c, build_disclosure(src), rng, rng)
        counts["confirm"] += t.verdict == "accept"
        if i == 0:
            keep(ps, a, s, sig, ev, token, dt, psig, pev, t)
    return counts


@pytest.mark.criterion(4)
def test_criterion_4_completeness(toy, mid):
    start = time.perf_counter()
    rng = random.Random(404)
    results = {name: completeness_run(ps, 200, rng) for name, ps in (("q=11", toy), ("64-bit", mid))}
    elapsed = time.perf_counter() - start
    ok = all(v == 200 for counts in results.values() for v in counts.values())
    report(4, ok and elapsed < 30, f"{results} in {elapsed:.1f}s")
    assert ok and elapsed < 30


# -- 5: soundness / tampering ------------------------------------------------

def _other(rng, bound, old, low=0):
    while True:
        new = rng.randrange(low, bound)
        if new != old:
            return new


def _other_elem(ps, rng, old):
    while True:
        new = pow(ps.g, rng.randrange(1, ps.q), ps.p)
        if new != old:
            return new


def _flip(rng, m):
    if not m:
        return b"\x00"
    i = rng.randrange(len(m))
    return m[:i] + bytes([m[i] ^ (1 << rng.randrange(8))]) + m[i + 1:]


def tamper_schnorr(ps, rng, a, c):
    s = schnorr_sign(ps, a, rng.randbytes(16), rng)
    field = rng.choice(["r", "s", "m"])
    bad = replace(s, **{field: _flip(rng, s.m) if field == "m" else _other(rng, ps.q, getattr(s, field))})
    return not schnorr_verify(ps, a.y, bad)


def _tampered_sig(ps, rng, sig, extra=()):
    field = rng.choice(["S", "W", "r", "m", *extra])
    if field == "m":
        value = _flip(rng, sig.m)
    elif field in ("W", "r_deleg"):
        value = _other_elem(ps, rng, getattr(sig, field))
    else:
        value = _other(rng, ps.q, getattr(sig, field))
    return replace(sig, **{field: value})


def tamper_directed(ps, rng, a, c):
    sig = directed_sign(ps, a, c.y, rng.randbytes(16), rng)
    try:
        return directed_verify(ps, c, a.y, _tampered_sig(ps, rng, sig)) is None
    except FormatError:
        return True


def tamper_proxy(ps, rng, a, c, token):
    sig = proxy_directed_sign(ps, token, c.y, rng.randbytes(16), rng)
    try:
        return proxy_directed_verify(ps, c, _tampered_sig(ps, rng, sig, ("r_deleg",))) is None
    except FormatError:
        return True


def tamper_delegation(ps, rng, a, c):
    osess, r_A = delegate_init(ps, a, rng)
    psess = new_proxy_session(ps, a.y)
    r = delegate_blind(ps, psess, r_A, rng)
    s_A = delegate_respond(ps, osess, r)
    try:
        delegate_finish(ps, psess, _other(rng, ps.q, s_A))
    except DelegationError:
        return True
    return False


def tamper_confirm(ps, rng, a, c):
    sig = directed_sign(ps, a, c.y, rng.randbytes(16), rng)
    pkg = build_disclosure(directed_verify(ps, c, a.y, sig))
    field = rng.choice(["w", "beta", "gamma", "u", "v", "alpha"])
    vstate, w = confirm.verifier_start(ps, pkg, rng)
    if field == "w":
        w = _other_elem(ps, rng, w)
    pstate, (beta, gamma) = confirm.prover_commit(ps, c, pkg, w, rng)
    if field == "beta":
        beta = _other_elem(ps, rng, beta)
    if field == "gamma":
        gamma = _other_elem(ps, rng, gamma)
    u, v = confirm.verifier_reveal(vstate, beta, gamma)
    if field == "u":
        u = _other(rng, ps.q, u, 1)
    if field == "v":
        v = _other(rng, ps.q, v, 1)
    try:
        alpha = confirm.prover_open(pstate, u, v)
    except ProtocolAbort:
        return True
    if field == "alpha":
        alpha = _other(rng, ps.q, alpha)
    return not confirm.verifier_finish(vstate, pkg, alpha)


@pytest.mark.criterion(5)
def test_criterion_5_soundness(mid):
    start = time.perf_counter()
    rng = random.Random(505)
    a, c = keygen(mid, rng, "A"), keygen(mid, rng, "C")
    token, _ = run_delegation(mid, a, rng, rng)
    trials = {
        "schnorr": lambda: tamper_schnorr(mid, rng, a, c),
        "directed": lambda: tamper_directed(mid, rng, a, c),
        "proxy": lambda: tamper_proxy(mid, rng, a, c, token),
        "delegation": lambda: tamper_delegation(mid, rng, a, c),
        "confirm": lambda: tamper_confirm(mid, rng, a, c),
    }
    rejected = {name: sum(trial() for _ in range(200)) for name, trial in trials.items()}

    forgeries = 0
    for _ in range(500):
        forged = _other(rng, mid.q, token.S, 1)
        m = rng.randbytes(16)
        S, W, r, _ = masked_commitment(mid, forged, c.y, m, rng)
        sig = ProxyDirectedSignature(S, W, r, m, token.original, c.y, token.r)
        forgeries += proxy_directed_verify(mid, c, sig) is None
    elapsed = time.perf_counter() - start
    ok = all(v >= 199 for v in rejected.values()) and forgeries == 500 and elapsed < 60
    report(5, ok, f"tamper rejections /200 {rejected}; forgeries rejected {forgeries}/500; {elapsed:.1f}s")
    assert ok


# -- 6: full-scale run -------------------------------------------------------

@pytest.mark.criterion(6)
def test_criterion_6_full_scale():
    start = time.perf_counter()
    rng = random.Random(606)
    ps = generate_params(512, 160, rng)
    assert ps.p.bit_length() == 512 and ps.q.bit_length() == 160
    assert validate_params(ps).valid
    a, c = keygen(ps, rng, "A"), keygen(ps, rng, "C")
    sig = directed_sign(ps, a, c.y, b"full-scale run", rng)
    ev = directed_verify(ps, c, a.y, sig)
    assert ev is not None
    t = run_confirmation(ps, c, build_disclosure(ev), rng, rng)
    assert t.verdict == "accept"
    keep(ps, ps, a, sig, ev, build_disclosure(ev), t)
    elapsed = time.perf_counter() - start
    report(6, elapsed < 10, f"512/160 generate+sign+verify+confirm in {elapsed:.2f}s")
    assert elapsed < 10


# -- 7: structural -----------------------------------------------------------

@pytest.mark.criterion(7)
def test_criterion_7_roundtrip_and_fuzz(toy, mid):
    start = time.perf_counter()
    objects = list(PRODUCED)
    for ps in (toy, mid):
        objects += [(ps, o) for o in every_object(ps, seed=7).values()]
    seen_tags = set()
    for ps, obj in objects:
        tag = wire.tag_of(obj)
        seen_tags.add(tag)
        data = wire.export_secret(obj) if isinstance(obj, KeyPair) else wire.encode(obj)
        kw = {"fixture": ps.hash_spec} if tag == wire.PARAMS and ps.hash_spec.is_fixture else {}
        back = wire.decode(data, tag, params=ps, **kw)
        again = wire.export_secret(back) if isinstance(back, KeyPair) else wire.encode(back)
        assert again == data, tag
    assert seen_tags == set(wire.CODECS)
    fuzz_decoders(100_000, seed=7)
    elapsed = time.perf_counter() - start
    report(7, True, f"{len(objects)} objects over {len(seen_tags)} formats round-trip; "
                    f"10^5 fuzz inputs, no crash; {elapsed:.1f}s")
