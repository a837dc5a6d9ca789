"""``sigbary`` command line: signatures, barycenters, normal forms and recovery.

All data travels as JSON with rationals written ``"p/q"``. Output is
deterministic, so identical inputs give byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import congruence_recovery as cg
from .barycenter import bary, bary_residual
from .checks import run_checks
from .errors import SigbaryError
from .ncpoly import bary_poly_parts
from .rational import to_fraction
from .signatures import PwlPath, sig_pwl
from .tensor_algebra import TensorSeq, lie_algebra_dim


class InputError(SigbaryError):
    pass


@dataclass
class CliConfig:
    command: str
    level: int | None = None
    dim: int | None = None
    inputs: list[str] = field(default_factory=list)
    svg: str | None = None
    check: bool = False
    show_poly: bool = False
    alpha: tuple[int, ...] | None = None
    omega: Fraction | None = None
    samples: int = 2
    count: int = 50
    seed: int = 0


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("composition parts must be positive")
    return parts


def _rational(text: str) -> Fraction:
    try:
        return to_fraction(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigbary", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def level_flag(p, required=False, default=None):
        p.add_argument("--level", "-k", type=_positive, required=required, default=default)

    p = sub.add_parser("sig", help="signature of a piecewise linear path")
    p.add_argument("--path", required=True, dest="inputs", action="append")
    level_flag(p)
    p.add_argument("--svg")

    p = sub.add_parser("bary", help="barycenter of signatures or of path signatures")
    p.add_argument("--inputs", nargs="+", required=True)
    level_flag(p)
    p.add_argument("--check", action="store_true", help="also print the residual")

    p = sub.add_parser("recover", help="path whose signature is the barycenter")
    p.add_argument("--inputs", nargs="+", default=[])
    level_flag(p, default=2)
    p.add_argument("--omega", type=_rational, help="family parameter for the level-3 example")
    p.add_argument("--svg")

    p = sub.add_parser("normal-form", help="simultaneous congruence transform for a composition")
    p.add_argument("--alpha", type=_composition, required=True)
    p.add_argument("--dim", "-d", type=_positive, help="also report the recovery order for this d")

    p = sub.add_parser("verify", help="run the randomized property suite")
    p.add_argument("--count", type=_positive, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--show-poly", action="store_true")
    p.add_argument("--samples", "-N", type=_positive, default=2)
    level_flag(p, default=3)

    p = sub.add_parser("dim", help="dimension of the free nilpotent Lie algebra")
    p.add_argument("--dim", "-d", "--d", type=_positive, required=True)
    p.add_argument("--level", "-k", "--k", type=_positive, required=True)
    return parser


def parse_config(argv: Sequence[str]) -> CliConfig:
    ns = build_parser().parse_args(list(argv))
    cfg = CliConfig(command=ns.command)
    for name in ("level", "dim", "inputs", "svg", "check", "show_poly", "alpha", "omega", "samples", "count", "seed"):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            setattr(cfg, name, getattr(ns, name))
    return cfg


# input handling


def _load_json(name: str):
    path = Path(name)
    if not path.is_file():
        raise InputError(f"input not found: {name}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{name}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_path(name: str) -> PwlPath:
    data = _load_json(name)
    if not isinstance(data, dict) or "increments" not in data:
        raise InputError(f"{name}: not a path (expected fields dim, increments)")
    return PwlPath.from_json_dict(data)


def load_element(name: str, level: int | None) -> TensorSeq:
    """A tensor sequence file as is, or a path file turned into its signature."""
    data = _load_json(name)
    if isinstance(data, dict) and "increments" in data:
        if level is None:
            raise InputError(f"{name}: a path input needs --level")
        return sig_pwl(PwlPath.from_json_dict(data), level)
    if isinstance(data, dict) and "levels" in data:
        x = TensorSeq.from_json_dict(data)
        if level is not None and level != x.level:
            if level > x.level:
                raise InputError(f"{name}: stored at level {x.level}, cannot raise to {level}")
            x = x.truncate(level)
        return x
    raise InputError(f"{name}: neither a path nor a tensor sequence")


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _write_svg(target: str, paths: Sequence[PwlPath], labels: Sequence[str]) -> None:
    if any(p.dim != 2 for p in paths):
        raise InputError("--svg needs planar (d=2) paths")
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        raise InputError("--svg needs matplotlib (pip install 'artifact[plot]')") from None
    fig, ax = plt.subplots(figsize=(4, 4))
    for p, label in zip(paths, labels):
        verts = p.vertices()
        ax.plot([float(v) for v in verts[0]], [float(v) for v in verts[1]], marker="o", label=label)
    ax.set_aspect("equal")
    ax.legend(loc="best", fontsize="small")
    fig.savefig(target, format="svg", metadata={"Date": None})
    plt.close(fig)


# commands


def cmd_sig(cfg: CliConfig, out) -> int:
    path = load_path(cfg.inputs[-1])
    if cfg.level is None:
        raise InputError("sig needs --level")
    print(_dump(sig_pwl(path, cfg.level).to_json_dict()), file=out)
    if cfg.svg:
        _write_svg(cfg.svg, [path], [Path(cfg.inputs[-1]).stem])
    return 0


def cmd_bary(cfg: CliConfig, out) -> int:
    sample = [load_element(name, cfg.level) for name in cfg.inputs]
    m = bary(sample)
    print(_dump(m.to_json_dict()), file=out)
    if cfg.check:
        r = bary_residual(m, sample)
        print("residual: 0" if r.is_zero() else f"residual: {_dump(r.to_json_dict())}", file=out)
        return 0 if r.is_zero() else 1
    return 0


def cmd_recover(cfg: CliConfig, out) -> int:
    if cfg.level == 3:
        if cfg.omega is None or cfg.inputs:
            raise InputError("level 3 recovery covers the two-segment example only: pass --omega and no inputs")
        path = PwlPath(cg.k3_family_matrix(cfg.omega))
        ok = cg.verify_recovery_k3(cfg.omega)
        print(_dump(path.to_json_dict()), file=out)
        print("residual: 0" if ok else "residual: nonzero", file=out)
        inputs = [PwlPath.from_columns([v]) for v in cg.K3_SAMPLE]
    elif cfg.level == 2:
        if not cfg.inputs:
            raise InputError("recover needs --inputs")
        inputs = [load_path(name) for name in cfg.inputs]
        path = cg.recover_k2(inputs)
        r = sig_pwl(path, 2) - bary([sig_pwl(p, 2) for p in inputs])
        ok = r.is_zero()
        print(_dump(path.to_json_dict()), file=out)
        print("residual: 0" if ok else "residual: nonzero", file=out)
    else:
        raise InputError("constructive recovery is available at level 2 (and level 3 via --omega)")
    if cfg.svg:
        labels = [f"input {i + 1}" for i in range(len(inputs))] + ["recovered"]
        _write_svg(cfg.svg, inputs + [path], labels)
    return 0 if ok else 1


def cmd_normal_form(cfg: CliConfig, out) -> int:
    res = cg.w_alpha_nf(cfg.alpha)
    payload = {"alpha": list(cfg.alpha)}
    payload.update(res.to_json_dict())
    if cfg.dim is not None:
        payload["recovery_order"] = cg.recovery_order(cfg.dim, cfg.alpha)
    print(_dump(payload), file=out)
    return 0


def cmd_verify(cfg: CliConfig, out) -> int:
    if cfg.show_poly:
        _, fs, _ = bary_poly_parts(cfg.samples, cfg.level)
        for j, f in enumerate(fs, start=1):
            print(f"f_{j} = {f}", file=out)
    outcomes = run_checks(cfg.count, cfg.seed)
    for o in outcomes:
        status = "PASS" if o.passed else "FAIL"
        tail = f" ({o.detail})" if o.detail else ""
        print(f"{status} {o.name} [{o.instances} instances]{tail}", file=out)
    return 0 if all(o.passed for o in outcomes) else 1


def cmd_dim(cfg: CliConfig, out) -> int:
    print(lie_algebra_dim(cfg.dim, cfg.level), file=out)
    return 0


HANDLERS = {
    "sig": cmd_sig,
    "bary": cmd_bary,
    "recover": cmd_recover,
    "normal-form": cmd_normal_form,
    "verify": cmd_verify,
    "dim": cmd_dim,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return HANDLERS[cfg.command](cfg, out)
    except (SigbaryError, ValueError, TypeError) as exc:
        message = " ".join(str(exc).split()) or type(exc).__name__
        print(f"sigbary: error: {message}", file=err)
        return 1


def main() -> None:
    sys.exit(run())
