"""Delegation, proxy signing and confirmation at p=23, q=11, g=6 via the CLI.

Usage: python3 scripts/scenario_delegation.py OUTDIR

Every random draw is forced with --scalars and the hash is a one-entry
fixture table, so each file in OUTDIR holds known decimal values.
"""

import sys
from pathlib import Path

from dirsig import wire
from dirsig.cli import run
from dirsig.params import HashSpec, ParamSet

MESSAGE = bytes([0, 8, 3, 18])
SECRETS = {"A": 3, "B": 5, "C": 6, "Y": 8}


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    f = lambda name: str(out / name)
    fixture = HashSpec.fixture({(16, 2, MESSAGE): 2})
    (out / "fixture.txt").write_bytes(wire.encode(fixture))
    (out / "params.txt").write_bytes(wire.encode(ParamSet(23, 11, 6, fixture)))
    (out / "message.bin").write_bytes(MESSAGE)
    test = ["--params", f("params.txt"), "--unsafe-test-mode", "--fixture-hash", f("fixture.txt")]

    def step(*argv, scalars=None, expect=0):
        argv = list(argv) + test + (["--scalars", scalars] if scalars else [])
        code = run(argv)
        if code != expect:
            raise SystemExit(f"step {argv[:2]} exited {code}, expected {expect}")

    for owner, x in SECRETS.items():
        step("keygen", "--owner", owner, "--out-secret", f(f"{owner}.sec"),
             "--out-public", f(f"{owner}.pub"), scalars=str(x))

    # A delegates to B
    step("delegate", "init", "--key", f("A.sec"), "--out", f("deleg1.txt"),
         "--state", f("A.deleg"), scalars="7")
    step("delegate", "blind", "--original", f("A.pub"), "--in", f("deleg1.txt"),
         "--out", f("deleg2.txt"), "--state", f("B.deleg"), scalars="5")
    step("delegate", "respond", "--key", f("A.sec"), "--in", f("deleg2.txt"),
         "--out", f("deleg3.txt"), "--state", f("A.deleg"))
    step("delegate", "finish", "--in", f("deleg3.txt"), "--out", f("deleg.txt"),
         "--state", f("B.deleg"), "--out-token", f("B.token"))

    # B signs toward C on A's behalf; C verifies and discloses
    step("proxy-sign", "--token", f("B.token"), "--receiver", f("C.pub"),
         "--message", f("message.bin"), "--out", f("proxysig.txt"), scalars="7,2")
    step("proxy-verify", "--key", f("C.sec"), "--sig", f("proxysig.txt"),
         "--out-evidence", f("evidence.txt"))
    step("disclose", "--evidence", f("evidence.txt"), "--out", f("package.txt"))

    # C convinces Y
    conf = ["--package", f("package.txt")]
    step("confirm", "verifier", *conf, "--out", f("confirm1.txt"), "--state", f("Y.conf"),
         scalars="13,15")
    step("confirm", "prover", *conf, "--key", f("C.sec"), "--in", f("confirm1.txt"),
         "--out", f("confirm2.txt"), "--state", f("C.conf"), scalars="8")
    step("confirm", "verifier", *conf, "--in", f("confirm2.txt"), "--out", f("confirm3.txt"),
         "--state", f("Y.conf"))
    step("confirm", "prover", *conf, "--key", f("C.sec"), "--in", f("confirm3.txt"),
         "--out", f("confirm4.txt"), "--state", f("C.conf"))
    step("confirm", "verifier", *conf, "--in", f("confirm4.txt"), "--out", f("confirm.txt"),
         "--state", f("Y.conf"))


if __name__ == "__main__":
    if len(sys.argv) != 2:
        raise SystemExit(__doc__)
    main(Path(sys.argv[1]))
