import logging
import random

import pytest

from dirsig import wire
from dirsig.errors import ParameterError
from dirsig.keys import keygen, validate_public_key
from dirsig.params import ParamSet, generate_params
from vectors import DELEG_PUBLICS, DELEG_SECRETS, REG_PUBLICS, REG_SECRETS, forced_key


@pytest.mark.parametrize("owner", sorted(DELEG_SECRETS))
def test_forced_keys_delegation_table(toy, owner):
    key = forced_key(toy, owner, DELEG_SECRETS[owner])
    assert key.y == DELEG_PUBLICS[owner]


@pytest.mark.parametrize("owner", sorted(REG_SECRETS))
def test_forced_keys_registration_table_needs_override(owner):
    ps = ParamSet(23, 11, 5)
    with pytest.raises(ParameterError):
        forced_key(ps, owner, REG_SECRETS[owner])
    # the second table column is the public key: y = g^x
    assert forced_key(ps.unchecked(), owner, REG_SECRETS[owner]).y == REG_PUBLICS[owner]


def test_validate_public_key(toy):
    assert pow(9, 11, 23) == 1
    assert validate_public_key(toy, 9)
    assert not validate_public_key(toy, 1)
    assert not validate_public_key(toy, 0)
    assert not validate_public_key(toy, 23)
    assert not validate_public_key(toy, 5)  # order 22


def test_toy_subgroup_exhaustive(toy):
    members = {y for y in range(23) if validate_public_key(toy, y)}
    assert members == {pow(6, x, 23) for x in range(1, 11)}


def test_random_keygens_valid(toy):
    big = generate_params(512, 160, random.Random(11))
    rng = random.Random(3)
    for ps in (toy, big):
        for i in range(100):
            key = keygen(ps, rng, f"u{i}")
            assert 1 <= key.x < ps.q
            assert key.y == pow(ps.g, key.x, ps.p)
            assert validate_public_key(ps, key.y)


def test_keygen_reproducible(mid):
    assert keygen(mid, random.Random(42), "A") == keygen(mid, random.Random(42), "A")


def test_keygen_rejects_bad_label(toy):
    with pytest.raises(ValueError):
        keygen(toy, random.Random(0), "has space")


def test_secret_never_leaks_through_repr_or_default_encoding(mid, caplog):
    key = keygen(mid, random.Random(5), "alice")
    secret = str(key.x)
    logging.getLogger("dirsig.test").warning("key: %r / %s", key, key)
    assert secret not in caplog.text
    assert secret not in repr(key)
    assert secret.encode() not in wire.encode(key)
    exported = wire.export_secret(key)
    assert secret.encode() in exported and b"marking = SECRET" in exported
