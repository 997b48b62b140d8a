"""Command-line front end.

Subcommands: seq, roots, classify, verify, sweep, rouche, figure.
Every library error exits nonzero with a one-line JSON record on stderr
carrying the machine-readable error code.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import classifier, polynomials, serialize, svgfig, verifier
from .errors import RegimeMismatch, TaylorZerosError
from .recurrence import RecurrenceSpec, characteristic, generate_sequence, validate
from .rootfinder import find_roots

_TARGETS = ("P", "Pstar", "H")


@dataclass
class RunConfig:
    command: str
    spec: tuple[float, ...] | None = None
    m: int = 10
    m_list: tuple[int, ...] = ()
    target: str = "P"
    seed: int = 0
    n: int = 100
    box: tuple[float, ...] = (-5.0, 5.0)
    format: str = "json"
    out: str | None = None
    boundary_tol: float = 1e-8
    rel_tol: float = 1e-13
    epsilon: float | None = None
    samples: int = 256
    regime: str | None = None
    extra: dict = field(default_factory=dict)


def _parse_floats(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad {what}: {text!r}") from None


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taylorzeros",
        description="Zero localization for partial sums of three-term recurrence series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec(p):
        p.add_argument(
            "--spec",
            required=True,
            type=lambda s: _parse_floats(s, "spec"),
            help="comma-separated a,b,c,a0,a1",
        )

    p = sub.add_parser("seq", help="print the sequence a0..a_m")
    add_spec(p)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("roots", help="zeros of P_m, Pstar_m, or H_m")
    add_spec(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--target", choices=_TARGETS, default="P")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--rel-tol", type=float, default=1e-13)
    p.add_argument("--out")

    p = sub.add_parser("classify", help="which zero-locus statement applies")
    add_spec(p)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="check the predicted locus on computed roots")
    add_spec(p)
    p.add_argument("--m-list", type=_parse_ints, default=verifier.DEFAULT_M_VALUES)
    p.add_argument("--boundary-tol", type=float, default=1e-8)
    p.add_argument("--out")

    p = sub.add_parser("sweep", help="seeded random parameter sweep")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=100)
    p.add_argument(
        "--box",
        type=lambda s: _parse_floats(s, "box"),
        default=(-5.0, 5.0),
        help="lo,hi applied to all five parameters, or ten numbers",
    )
    p.add_argument("--m-list", type=_parse_ints, default=(50, 100))
    p.add_argument("--boundary-tol", type=float, default=1e-8)
    p.add_argument("--out")

    p = sub.add_parser("rouche", help="sampled comparison-inequality margins")
    add_spec(p)
    p.add_argument("--m", type=int, default=100)
    p.add_argument("--epsilon", type=float, default=None)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument(
        "--regime",
        choices=[r.value for r in classifier.Regime],
        default=None,
        help="default: every regime whose preconditions hold",
    )
    p.add_argument("--out")

    p = sub.add_parser("figure", help="SVG scatter of zeros with reference circle")
    add_spec(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--target", choices=("P", "H"), default="H")
    p.add_argument("--format", choices=("svg",), default="svg")
    p.add_argument("--out")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in (
        "spec",
        "m",
        "m_list",
        "target",
        "seed",
        "n",
        "box",
        "format",
        "out",
        "boundary_tol",
        "rel_tol",
        "epsilon",
        "samples",
        "regime",
    ):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    return cfg


def _fmt_number(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def _emit(cfg: RunConfig, text: str, stdout) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _emit_json(cfg: RunConfig, payload: dict, stdout) -> None:
    _emit(cfg, json.dumps(payload, sort_keys=True, allow_nan=True) + "\n", stdout)


def _spec_of(cfg: RunConfig) -> RecurrenceSpec:
    if cfg.spec is None or len(cfg.spec) != 5:
        raise argparse.ArgumentTypeError("--spec needs exactly five numbers a,b,c,a0,a1")
    return validate(*cfg.spec)


def _target_poly(spec: RecurrenceSpec, m: int, target: str) -> polynomials.PolynomialCoeffs:
    if target == "P":
        return polynomials.taylor_poly(spec, m)
    if target == "Pstar":
        return polynomials.reciprocal_poly(polynomials.taylor_poly(spec, m))
    return polynomials.normalized_H(spec, m)


def _run_seq(cfg: RunConfig, stdout) -> None:
    spec = _spec_of(cfg)
    seq = generate_sequence(spec, cfg.m)
    _emit(cfg, " ".join(_fmt_number(x) for x in seq) + "\n", stdout)


def _run_roots(cfg: RunConfig, stdout) -> None:
    spec = _spec_of(cfg)
    poly = _target_poly(spec, cfg.m, cfg.target)
    rs = find_roots(poly.coeffs, rel_tol=cfg.rel_tol)
    if cfg.format == "csv":
        rows = ["re,im,modulus,residual"]
        for z, res in zip(rs.roots, rs.residuals):
            rows.append(f"{z.real!r},{z.imag!r},{abs(z)!r},{res!r}")
        _emit(cfg, "\n".join(rows) + "\n", stdout)
        return
    payload = serialize.rootset_json(rs)
    payload.update(
        {"spec": serialize.spec_json(spec), "m": cfg.m, "target": cfg.target}
    )
    _emit_json(cfg, payload, stdout)


def _run_classify(cfg: RunConfig, stdout) -> None:
    spec = _spec_of(cfg)
    cl = classifier.classify(spec, characteristic(spec))
    payload = serialize.classification_json(cl)
    payload["spec"] = serialize.spec_json(spec)
    _emit_json(cfg, payload, stdout)


def _run_verify(cfg: RunConfig, stdout) -> None:
    spec = _spec_of(cfg)
    report = verifier.verify_instance(spec, tuple(cfg.m_list), cfg.boundary_tol)
    _emit_json(cfg, serialize.verification_report_json(report), stdout)


def _box_of(cfg: RunConfig) -> verifier.ParamBox:
    vals = cfg.box
    if len(vals) == 2:
        vals = vals * 5
    if len(vals) != 10:
        raise argparse.ArgumentTypeError("--box needs 2 or 10 numbers")
    pairs = [(vals[i], vals[i + 1]) for i in range(0, 10, 2)]
    return verifier.ParamBox(*pairs)


def _run_sweep(cfg: RunConfig, stdout) -> None:
    report = verifier.sweep(
        cfg.seed, cfg.n, _box_of(cfg), tuple(cfg.m_list), cfg.boundary_tol
    )
    _emit_json(cfg, serialize.sweep_report_json(report), stdout)


def _run_rouche(cfg: RunConfig, stdout) -> None:
    spec = _spec_of(cfg)
    char = characteristic(spec)
    if cfg.regime is not None:
        regimes = [classifier.Regime(cfg.regime)]
    else:
        regimes = list(classifier.Regime)
    margins = {}
    for regime in regimes:
        try:
            margins[regime.value] = classifier.rouche_margin(
                char, cfg.m, cfg.epsilon, cfg.samples, regime
            )
        except RegimeMismatch:
            if cfg.regime is not None:
                raise
    if not margins:
        raise RegimeMismatch("no margin regime applies to this spec")
    # some regime accepted, so t2 > 1 and the default window exists
    epsilon = cfg.epsilon if cfg.epsilon is not None else classifier.default_epsilon(char)
    payload = {
        "spec": serialize.spec_json(spec),
        "m": cfg.m,
        "epsilon": epsilon,
        "n_samples": cfg.samples,
        "margins": margins,
    }
    _emit_json(cfg, payload, stdout)


def _run_figure(cfg: RunConfig, stdout) -> None:
    spec = _spec_of(cfg)
    char = characteristic(spec)
    poly = _target_poly(spec, cfg.m, cfg.target)
    rs = find_roots(poly.coeffs)
    points = list(rs.roots) + [0j] * rs.trailing_zero_multiplicity
    radius = abs(char.t2) if cfg.target == "H" else char.critical_radius
    spec_text = ",".join(_fmt_number(v) for v in spec.as_tuple())
    title = f"zeros of {cfg.target}_{cfg.m} for ({spec_text}); circle r={radius:.6g}"
    _emit(cfg, svgfig.render_scatter_svg(points, radius, title), stdout)


_RUNNERS = {
    "seq": _run_seq,
    "roots": _run_roots,
    "classify": _run_classify,
    "verify": _run_verify,
    "sweep": _run_sweep,
    "rouche": _run_rouche,
    "figure": _run_figure,
}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Execute one configuration; returns the process exit status."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        _RUNNERS[cfg.command](cfg, stdout)
    except TaylorZerosError as exc:
        record = {"error": exc.code, "message": str(exc)}
        stderr.write(json.dumps(record, sort_keys=True) + "\n")
        return 1
    except (argparse.ArgumentTypeError, ValueError) as exc:
        record = {"error": "UsageError", "message": str(exc)}
        stderr.write(json.dumps(record, sort_keys=True) + "\n")
        return 2
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
