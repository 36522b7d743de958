"""Command line driver: verification suites, bracket evaluation, dimension tables.

Reports are canonical JSON (sorted keys, two-space indent, trailing newline)
and contain no timing or host data, so a fixed (config, seed) pair produces
byte-identical output across runs and across --jobs settings; --jobs is an
execution hint and is deliberately not echoed into reports.  Randomized
suites use Python's random.Random (Mersenne Twister) seeded from --seed.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import element_str, parse_element, vir_bracket
from .cocycle import TwoCochain, normalize_cocycle, recognize_eta
from .density import formal_params
from .errors import NotACocycleError, NotNormalizableError, ParseError, SolvirError
from .gvm import quotient_dim_level1
from .verification import run_suite
from .verma import TruncationBox, weight_space_dim_truncated

SUITES = ("jacobi", "cocycle", "density", "verma", "gvm", "all")


@dataclass
class RunConfig:
    n: int = 2
    box: int = 3
    boxes: list = field(default_factory=list)
    seed: int = 0
    spec: dict = field(default_factory=dict)
    out: str | None = None
    jobs: int = 1

    def validate(self):
        if self.n < 1:
            raise ValueError("rank n must be >= 1")
        if self.box < 1 or any(b < 1 for b in self.boxes):
            raise ValueError("box radii must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def echo(self):
        """Config as embedded in reports; jobs is execution-only."""
        return {
            "n": self.n,
            "box": self.box,
            "boxes": list(self.boxes),
            "seed": self.seed,
            "spec": {k: str(v) for k, v in sorted(self.spec.items())},
        }


def parse_spec(text: str) -> dict:
    """mu1=2/3,mu2=5 -> {'mu1': Fraction(2,3), 'mu2': Fraction(5)}."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise ValueError(f"bad specialization entry {item!r}")
        key, value = item.split("=", 1)
        out[key.strip()] = Fraction(value.strip())
    return out


def parse_boxes(text: str) -> list:
    """Accept '1..6' ranges and comma lists."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in text.split(",") if tok.strip()]


def load_config_file(path: str) -> dict:
    """Flat key = value lines mirroring the flags; '#' starts a comment."""
    values = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad config line {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key] = value
    return values


def build_config(args) -> RunConfig:
    cfg = RunConfig()
    file_values = load_config_file(args.config) if getattr(args, "config", None) else {}
    if "n" in file_values:
        cfg.n = int(file_values["n"])
    if "box" in file_values:
        cfg.box = int(file_values["box"])
    if "boxes" in file_values:
        cfg.boxes = parse_boxes(file_values["boxes"])
    if "seed" in file_values:
        cfg.seed = int(file_values["seed"])
    if "spec" in file_values:
        cfg.spec = parse_spec(file_values["spec"])
    if "out" in file_values:
        cfg.out = file_values["out"]
    if "jobs" in file_values:
        cfg.jobs = int(file_values["jobs"])
    if getattr(args, "n", None) is not None:
        cfg.n = args.n
    if getattr(args, "box", None) is not None:
        cfg.box = args.box
    if getattr(args, "boxes", None):
        cfg.boxes = parse_boxes(args.boxes)
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed
    if getattr(args, "spec", None):
        cfg.spec = parse_spec(args.spec)
    if getattr(args, "out", None):
        cfg.out = args.out
    if getattr(args, "jobs", None) is not None:
        cfg.jobs = args.jobs
    cfg.validate()
    return cfg


def emit(report: dict, out_path: str | None) -> str:
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)
    return text


def cmd_verify(args) -> int:
    cfg = build_config(args)
    theta_input = None
    if getattr(args, "input", None):
        if args.suite != "cocycle":
            print("--input is only meaningful for the cocycle suite",
                  file=sys.stderr)
            return 2
        data = json.loads(Path(args.input).read_text())
        theta_input = TwoCochain.from_records(data)
        if theta_input.n != cfg.n:
            cfg.n = theta_input.n
    checks = run_suite(args.suite, cfg.n, cfg.box, cfg.seed,
                       boxes=cfg.boxes or None, spec=cfg.spec,
                       theta_input=theta_input)
    checks.sort(key=lambda c: c["id"])
    failed = [c for c in checks if c["status"] != "pass"]
    report = {
        "command": f"verify {args.suite}",
        "version": __version__,
        "config": cfg.echo(),
        "checks": checks,
        "counts": {"pass": len(checks) - len(failed), "fail": len(failed)},
        "status": "pass" if not failed else "fail",
    }
    emit(report, cfg.out)
    return 0 if not failed else 1


def _infer_rank(texts, explicit):
    if explicit is not None:
        return explicit
    for text in texts:
        idx = text.find("e[")
        if idx >= 0:
            inner = text[idx + 2:text.index("]", idx)]
            return inner.count(",") + 1
    raise ValueError("rank cannot be inferred; pass --n")


def cmd_bracket(args) -> int:
    n = _infer_rank([args.left, args.right], args.n)
    x = parse_element(args.left, n)
    y = parse_element(args.right, n)
    print(element_str(vir_bracket(x, y)))
    return 0


def cmd_dims(args) -> int:
    cfg = build_config(args)
    if args.target == "verma":
        if args.level is not None:
            shift = (-args.level,) + (0,) * (cfg.n - 1)
            boxes = [max(args.level, 1)]
            table = [{"N": N, "L": N,
                      "dim": weight_space_dim_truncated(
                          cfg.n, shift, TruncationBox(N, N))}
                     for N in boxes]
        else:
            if not args.shift:
                print("dims verma needs --shift or --level", file=sys.stderr)
                return 2
            shift = tuple(int(t) for t in args.shift.split(","))
            if len(shift) != cfg.n:
                print(f"shift {shift} does not match rank {cfg.n}",
                      file=sys.stderr)
                return 2
            boxes = cfg.boxes or [1, 2, 3, 4]
            table = [{"N": N, "L": 2 * N + 1,
                      "dim": weight_space_dim_truncated(
                          cfg.n, shift, TruncationBox(N, 2 * N + 1))}
                     for N in boxes]
        canonical_family = (cfg.n >= 2 and shift[0] == -1
                            and not any(shift[1:]))
        report = {
            "command": "dims verma",
            "version": __version__,
            "config": cfg.echo(),
            "n": cfg.n,
            "shift": list(shift),
            "boxes": table,
            "family_lower_bound": table[-1]["N"] if canonical_family else 0,
        }
        emit(report, cfg.out)
        return 0
    if args.target == "gvm":
        if cfg.n < 2:
            print("dims gvm needs rank n >= 2", file=sys.stderr)
            return 2
        kappa_text = args.kappa or "0"
        kappa = tuple(int(t) for t in kappa_text.split(","))
        if len(kappa) == 1 and cfg.n > 2:
            kappa = kappa * (cfg.n - 1)
        if len(kappa) != cfg.n - 1:
            print(f"kappa {kappa} does not match rank {cfg.n}", file=sys.stderr)
            return 2
        boxes = cfg.boxes or [1, 2, 3, 4]
        result = quotient_dim_level1(cfg.n, kappa, formal_params(cfg.n - 1), boxes)
        report = {"command": "dims gvm", "version": __version__,
                  "config": cfg.echo()}
        report.update(result.as_dict())
        emit(report, cfg.out)
        return 0
    print(f"unknown dims target {args.target!r}", file=sys.stderr)
    return 2


def cmd_normalize(args) -> int:
    cfg = build_config(args)
    data = json.loads(Path(args.input).read_text())
    theta = TwoCochain.from_records(data)
    try:
        eta, shift = normalize_cocycle(theta, cfg.box)
        a, b = recognize_eta(eta)
    except NotACocycleError as exc:
        report = {"command": "normalize", "version": __version__,
                  "config": cfg.echo(), "status": "fail",
                  "error": "not_a_cocycle",
                  "failing_triple": [list(p) for p in exc.triple],
                  "residual": str(exc.residual)}
        emit(report, cfg.out)
        return 1
    except NotNormalizableError as exc:
        report = {"command": "normalize", "version": __version__,
                  "config": cfg.echo(), "status": "fail",
                  "error": "not_normalizable",
                  "pair": [list(p) for p in exc.pair], "value": str(exc.value)}
        emit(report, cfg.out)
        return 1
    report = {
        "command": "normalize",
        "version": __version__,
        "config": cfg.echo(),
        "status": "pass",
        "eta": [[list(alpha), str(value)]
                for alpha, value in sorted(eta.values.items())],
        "shift": shift.to_records(),
        "recognized": {"a": str(a), "b": str(b)},
    }
    emit(report, cfg.out)
    return 0


def schema_path() -> Path:
    return Path(__file__).parent / "schema" / "report.schema.json"


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solvir",
        description="Exact checks and computations for the solenoidal "
                    "Virasoro algebra")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p, want_box=True):
        p.add_argument("--n", type=int, default=None, help="lattice rank")
        if want_box:
            p.add_argument("--box", type=int, default=None,
                           help="truncation radius")
        p.add_argument("--boxes", type=str, default=None,
                       help="radius list: '1..6' or '2,4,6'")
        p.add_argument("--seed", type=int, default=None, help="PRNG seed")
        p.add_argument("--spec", type=str, default=None,
                       help="specialization map, e.g. mu1=2/3,mu2=5")
        p.add_argument("--config", type=str, default=None,
                       help="flat key=value config file")
        p.add_argument("--out", type=str, default=None, help="output path")
        p.add_argument("--jobs", type=int, default=None,
                       help="worker hint; never changes output bytes")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--input", type=str, default=None,
                          help="two-cochain JSON file (cocycle suite)")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_bracket = sub.add_parser("bracket", help="bracket of two elements")
    p_bracket.add_argument("left")
    p_bracket.add_argument("right")
    p_bracket.add_argument("--n", type=int, default=None)
    p_bracket.set_defaults(func=cmd_bracket)

    p_dims = sub.add_parser("dims", help="weight dimension and rank tables")
    p_dims.add_argument("target", choices=("verma", "gvm"))
    p_dims.add_argument("--shift", type=str, default=None,
                        help="verma weight shift, e.g. -1,0")
    p_dims.add_argument("--level", type=int, default=None,
                        help="rank-1 verma level")
    p_dims.add_argument("--kappa", type=str, default=None,
                        help="gvm weight index, e.g. 0 or 1,-1")
    p_dims.add_argument("--mu1", type=str, default=None,
                        help="record a mu1 specialization (dimensions are "
                             "independent of it)")
    common(p_dims)
    p_dims.set_defaults(func=cmd_dims)

    p_norm = sub.add_parser("normalize", help="normalize a two-cochain file")
    p_norm.add_argument("--input", type=str, required=True)
    common(p_norm)
    p_norm.set_defaults(func=cmd_normalize)
    return parser


def _merge_negative_values(argv):
    """Rewrite '--shift -1,0' as '--shift=-1,0' so argparse accepts it."""
    merged = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in ("--shift", "--kappa") and i + 1 < len(argv) \
                and argv[i + 1].startswith("-"):
            merged.append(f"{tok}={argv[i + 1]}")
            skip = True
        else:
            merged.append(tok)
    return merged


def main(argv=None) -> int:
    parser = make_parser()
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(_merge_negative_values(argv))
    if getattr(args, "mu1", None):
        merged = parse_spec(args.spec) if args.spec else {}
        merged["mu1"] = Fraction(args.mu1)
        args.spec = ",".join(f"{k}={v}" for k, v in sorted(merged.items()))
    try:
        return args.func(args)
    except (ValueError, ParseError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SolvirError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
