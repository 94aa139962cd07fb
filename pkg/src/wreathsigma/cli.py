"""Command-line driver.

Exit codes: 0 for In / Certified / success, 3 for Out (including a
disconnection witness or an invalid certificate), 4 for Unknown or NotFound,
1 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib.resources import files
from pathlib import Path

from . import report
from .character import Character
from .dsl import Workspace, parse_workspace
from .engine import Status, sample_sphere, sigma1, sigma2
from .errors import DslError, WreathSigmaError
from .groups import validate_finiteness
from .lab.ball import DEFAULT_MARGIN, DEFAULT_RADIUS, ball, connectivity_evidence
from .lab.concrete import realize
from .lab.renz import RenzCertificate, find_renz_certificate, verify_renz_certificate
from .omega import omega1, prop1_hypothesis, reidemeister_conclusions
from .rational import to_fraction

EXIT_OK, EXIT_ERROR, EXIT_OUT, EXIT_UNKNOWN = 0, 1, 3, 4
STATUS_EXIT = {Status.IN: EXIT_OK, Status.OUT: EXIT_OUT, Status.UNKNOWN: EXIT_UNKNOWN}

COMMANDS = ("sigma1", "sigma2", "omega1", "reid", "sample", "ball-evidence", "certify", "find-cert", "validate")


def load_workspace(paths) -> Workspace:
    ws = parse_workspace(files("wreathsigma").joinpath("data/prelude.sigws").read_text(encoding="utf-8"))
    for p in paths or ():
        ws = ws.merged(parse_workspace(Path(p).read_text(encoding="utf-8"), base=ws))
    return ws


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workspace", "-w", action="append", default=[], help="workspace file (.sigws)")
    common.add_argument("--group", required=True, help="group name from the workspace or catalog")
    common.add_argument("--char", help="character name, or an inline vector such as [1,0]")
    common.add_argument("--json", action="store_true", help="print the full JSON report")
    parser = argparse.ArgumentParser(prog="wreathsigma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "sample":
            p.add_argument("--level", type=int, choices=(1, 2), default=1)
            p.add_argument("--resolution", type=int, default=3)
            p.add_argument("--workers", type=int, default=1)
        if name == "ball-evidence":
            p.add_argument("--radius", type=int, default=DEFAULT_RADIUS)
            p.add_argument("--margin", type=int, default=DEFAULT_MARGIN)
        if name == "find-cert":
            p.add_argument("--max-t-len", type=int, default=3)
            p.add_argument("--max-w-len", type=int, default=5)
        if name == "certify":
            p.add_argument("--cert", required=True, help="certificate JSON, or a path to a JSON file")
    return parser


def _character(ws: Workspace, group_name: str, text: str | None) -> Character:
    if text is None:
        raise DslError("this command needs --char")
    group = ws.group(group_name)
    if text in ws.chars:
        chi = ws.chars[text]
        if chi.group != group:
            raise DslError(f"character {text!r} is defined on {ws.char_groups[text]!r}, not {group_name!r}")
        return chi
    body = text.strip().strip("[]")
    if not body or not all(c in "0123456789-/, " for c in body):
        raise DslError(f"unknown character {text!r}")
    return Character(group, tuple(to_fraction(v) for v in body.split(",")))


def run(args) -> tuple[dict, int, str]:
    """Execute one parsed command: (report, exit code, one-line summary)."""
    ws = load_workspace(args.workspace)
    group = ws.group(args.group)
    command = {"name": args.command, "group": args.group}
    if args.char is not None:
        command["char"] = args.char
    cmd = args.command

    if cmd in ("sigma1", "sigma2"):
        chi = _character(ws, args.group, args.char)
        v = (sigma1 if cmd == "sigma1" else sigma2)(group, chi)
        return report.envelope(command, report.verdict(v)), STATUS_EXIT[v.status], v.status.value

    if cmd == "validate":
        r = validate_finiteness(group)
        return report.envelope(command, report.finiteness(r)), EXIT_OK, f"fg={str(r.fg).lower()} fp={str(r.fp).lower()}"

    if cmd == "omega1":
        d = omega1(group)
        code = EXIT_OK if d.certified else EXIT_UNKNOWN
        summary = f"{d.hypothesis.status.value}: {d.region} ({d.cardinality.value})" if d.certified else "Unknown"
        return report.envelope(command, report.omega(d)), code, summary

    if cmd == "reid":
        items = reidemeister_conclusions(group)
        body = report.reid(items, prop1_hypothesis(group))
        summary = ", ".join(c.kind.value for c in items) or "no conclusion"
        return report.envelope(command, body), EXIT_OK if items else EXIT_UNKNOWN, summary

    if cmd == "sample":
        command.update(level=args.level, resolution=args.resolution)
        s = sample_sphere(group, args.level, args.resolution, args.workers)
        summary = " ".join(f"{k}={v}" for k, v in s.counts.items())
        return report.envelope(command, report.sphere(s)), EXIT_OK, summary

    chi = _character(ws, args.group, args.char)
    concrete = realize(group, ws.letters_of(args.group))
    command["letters"] = list(concrete.alphabet)

    if cmd == "ball-evidence":
        command.update(radius=args.radius, margin=args.margin)
        e = connectivity_evidence(ball(concrete, args.radius), chi.values, args.margin)
        code = EXIT_OUT if e.disconnected else EXIT_OK
        return report.envelope(command, report.evidence(e)), code, f"{e.kind} (evidence, not proof)"

    if cmd == "find-cert":
        command.update(max_t_len=args.max_t_len, max_w_len=args.max_w_len)
        cert = find_renz_certificate(concrete, chi.values, args.max_t_len, args.max_w_len)
        if cert is None:
            body = {"found": False, "note": "NotFound is inconclusive"}
            return report.envelope(command, body), EXIT_UNKNOWN, "NotFound"
        body = {"found": True, "certificate": report.certificate(cert)}
        body["check"] = report.check(verify_renz_certificate(concrete, chi.values, cert))
        return report.envelope(command, body), EXIT_OK, "found t = " + body["certificate"]["t"]

    if cmd == "certify":
        text = args.cert
        if not text.lstrip().startswith("{"):
            text = Path(text).read_text(encoding="utf-8")
        cert = RenzCertificate.from_json(concrete, json.loads(text))
        chk = verify_renz_certificate(concrete, chi.values, cert)
        body = {"certificate": report.certificate(cert), "check": report.check(chk)}
        summary = "valid" if chk.ok else f"invalid: {chk.failures[0].clause} ({chk.failures[0].letter})"
        return report.envelope(command, body), EXIT_OK if chk.ok else EXIT_OUT, summary

    raise DslError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        body, code, summary = run(args)
    except (WreathSigmaError, OSError, json.JSONDecodeError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(report.dumps(body) if args.json else summary + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
