"""Command-line front end.

Input files are JSON objects {"n": int, "configs": [[[int, ...], ...], ...],
"labels": [...]}, optionally with "degrees": [int, ...] for fit samples.

Exit codes: 0 ok, 1 example mismatch, 2 input error, 3 internal
disagreement, 4 size gate, 5 genericity failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus, planar
from .cayley import CayleySystem, PointConfig, build_cayley
from .errors import (
    ConfigError,
    FitError,
    GenericityError,
    InstabilityError,
    MdiscError,
    SizeGateError,
)
from .strata import fingerprint, fit_degree_formula, same_stratum
from .tropical import is_defective, tropical_degree

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_DISAGREE, EXIT_SIZE, EXIT_GENERIC = 0, 1, 2, 3, 4, 5


class MalformedInputError(ConfigError):
    pass


class DuplicatePointError(ConfigError):
    pass


class ConfigDimensionError(ConfigError):
    pass


def parse_data(data, origin: str = "<input>") -> list[PointConfig]:
    if not isinstance(data, dict) or "configs" not in data:
        raise MalformedInputError(f"{origin}: expected an object with a 'configs' list")
    configs = data["configs"]
    n = data.get("n", len(configs) if isinstance(configs, list) else None)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MalformedInputError(f"{origin}: 'n' must be a positive integer")
    if not isinstance(configs, list) or not configs:
        raise MalformedInputError(f"{origin}: 'configs' must be a nonempty list")
    if len(configs) != n:
        raise ConfigDimensionError(f"{origin}: n={n} but {len(configs)} configurations given")
    labels = data.get("labels") or [f"A{k + 1}" for k in range(n)]
    out = []
    for k, pts in enumerate(configs, 1):
        if not isinstance(pts, list) or not pts:
            raise MalformedInputError(f"{origin}: block {k} must be a nonempty list of points")
        seen = set()
        for p in pts:
            if not isinstance(p, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in p):
                raise MalformedInputError(f"{origin}: block {k} has a non-integer point {p!r}")
            if len(p) != n:
                raise ConfigDimensionError(
                    f"{origin}: point {p} in block {k} has dimension {len(p)}, expected {n}"
                )
            if tuple(p) in seen:
                raise DuplicatePointError(f"duplicate point in block {k}")
            seen.add(tuple(p))
        out.append(PointConfig(tuple(tuple(p) for p in pts), str(labels[k - 1])))
    return out


def parse_config(path) -> list[PointConfig]:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise MalformedInputError(f"{path}: no such file") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedInputError(f"{path}: malformed JSON ({exc})") from None
    return parse_data(data, str(path))


def _read_degrees(path):
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return data.get("degrees")


def _planar_ok(sys: CayleySystem) -> bool:
    return sys.n == 2 and all(planar.hull(c).dim == 2 for c in sys.configs)


def _planar_result(sys: CayleySystem) -> dict:
    b = planar.planar_bidegree(*sys.configs)
    return {
        "latticeIndex": b.lattice_index,
        "cycle": list(b.cycle),
        "reduced": list(b.reduced),
        "defective": b.defective,
        "method": "planar",
    }


def _tropical_result(sys: CayleySystem, seed: int, force: bool) -> dict:
    t = tropical_degree(sys, seed=seed, force=force)
    return {
        "latticeIndex": t.lattice_index,
        "cycle": list(t.cycle),
        "reduced": list(t.reduced),
        "defective": t.defective,
        "method": "tropical",
        "status": t.status,
        "weights": [list(r.w) for r in t.runs],
    }


def fmt_degree(deg) -> str:
    return "(" + ",".join(str(x) for x in deg) + ")"


def _fmt(res: dict) -> str:
    return (
        f"{res['method']}: cycle {fmt_degree(res['cycle'])}, reduced {fmt_degree(res['reduced'])}, "
        f"latticeIndex {res['latticeIndex']}, defective {str(res['defective']).lower()}"
    )


def compute_degree(sys: CayleySystem, method: str = "auto", seed: int = 0, force: bool = False):
    """Returns (report dict, agree flag or None)."""
    if method == "auto":
        method = "planar" if _planar_ok(sys) else "tropical"
    if method == "planar":
        if not _planar_ok(sys):
            raise ConfigError("--method planar needs two full-dimensional planar configurations")
        res = _planar_result(sys)
        res["seed"] = seed
        return res, None
    if method == "tropical":
        res = _tropical_result(sys, seed, force)
        res["seed"] = seed
        return res, None
    if method == "both":
        if not _planar_ok(sys):
            raise ConfigError("--method both needs two full-dimensional planar configurations")
        p = _planar_result(sys)
        t = _tropical_result(sys, seed, force)
        agree = p["cycle"] == t["cycle"] and p["latticeIndex"] == t["latticeIndex"]
        res = dict(p)
        res.update(method="both", seed=seed, planar=p, tropical=t, agree=agree)
        return res, agree
    raise ConfigError(f"unknown method {method!r}")


def cmd_degree(args) -> int:
    sys_ = build_cayley(parse_config(args.file))
    res, agree = compute_degree(sys_, args.method, args.seed, args.force)
    if args.format == "json":
        print(json.dumps(res, sort_keys=True))
    elif agree is None:
        print(_fmt(res))
    else:
        print(_fmt(res["planar"]))
        print(_fmt(res["tropical"]))
        print("AGREE" if agree else "DISAGREE")
    return EXIT_OK if agree in (None, True) else EXIT_DISAGREE


def cmd_defect(args) -> int:
    sys_ = build_cayley(parse_config(args.file))
    verdict, how = is_defective(sys_, seed=args.seed, trials=args.trials)
    print(f"{'DEFECTIVE' if verdict else 'NON-DEFECTIVE'} ({how})")
    return EXIT_OK


def cmd_stratum(args) -> int:
    a = fingerprint(build_cayley(parse_config(args.a)))
    b = fingerprint(build_cayley(parse_config(args.b)))
    print("SAME-STRATUM" if same_stratum(a, b) else "DIFFERENT-STRATUM")
    return EXIT_OK


def _sample(path, seed, force):
    sys_ = build_cayley(parse_config(path))
    deg = _read_degrees(path)
    if deg is None:
        deg = list(tropical_degree(sys_, seed=seed, force=force).cycle)
    return sys_, deg


def cmd_fit(args) -> int:
    samples = [_sample(p, args.seed, args.force) for p in args.samples]
    k = args.block - 1
    if not 0 <= k < samples[0][0].n:
        raise ConfigError(f"--block must be between 1 and {samples[0][0].n}")
    holdout = _sample(args.holdout, args.seed, args.force) if args.holdout else None
    formula = fit_degree_formula(samples, k, holdout=holdout)
    if args.format == "json":
        print(json.dumps({
            "block": args.block,
            "coefficients": {
                ",".join(str(j + 1) for j in S): str(c) for S, c in sorted(formula.coefficients.items())
            },
            "vanishingDimension": len(formula.vanishing),
            "holdout": None if holdout is None else holdout[1][k],
        }, sort_keys=True))
        return EXIT_OK
    print(f"degree of block {args.block} =")
    for S, c in sorted(formula.coefficients.items()):
        print(f"  {c} * p[{','.join(str(j + 1) for j in S)}]")
    print(f"unique modulo {len(formula.vanishing)} vanishing forms")
    if holdout is not None:
        print(f"held-out sample reproduced: {holdout[1][k]}")
    return EXIT_OK


def run_example(name: str, seed: int = 0, force: bool = False) -> tuple[bool, str]:
    ex = corpus.CORPUS[name]
    sys_ = build_cayley(ex.configs)
    res, agree = compute_degree(sys_, "auto", seed, force)
    got = tuple(res["cycle"])
    ok = got == ex.cycle and res["defective"] == ex.defective
    if not ex.defective:
        ok = ok and res["latticeIndex"] == ex.lattice_index
    line = f"{'PASS' if ok else 'FAIL'} {fmt_degree(got)}"
    if not ok:
        line += f" expected {fmt_degree(ex.cycle)}"
        if ex.note:
            line += f" ({ex.note})"
    return ok, line


def cmd_examples(args) -> int:
    if args.list:
        for name, ex in corpus.CORPUS.items():
            print(f"{name}: {ex.source}")
        return EXIT_OK
    names = [args.run] if args.run else list(corpus.CORPUS)
    for name in names:
        if name not in corpus.CORPUS:
            raise ConfigError(f"unknown example {name!r}; see --list")
    status = EXIT_OK
    for name in names:
        ok, line = run_example(name, args.seed, args.force)
        print(line if args.run else f"{name}: {line}")
        if not ok:
            status = EXIT_MISMATCH
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mdisc", description="Degrees of mixed discriminants.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for generic weights (default 0)")
    common.add_argument("--force", action="store_true", help="override the chain-enumeration size gate")

    p = sub.add_parser("degree", parents=[common], help="multidegree of the discriminant cycle")
    p.add_argument("--method", choices=["auto", "planar", "tropical", "both"], default="auto")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("file")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("defect", parents=[common], help="defectiveness verdict")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("file")
    p.set_defaults(func=cmd_defect)

    p = sub.add_parser("stratum", help="compare tropical matroid strata")
    p.add_argument("action", choices=["compare"])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_stratum)

    p = sub.add_parser("fit", parents=[common], help="fit a linear degree formula on a stratum")
    p.add_argument("--block", type=int, required=True, help="block number, starting at 1")
    p.add_argument("--holdout", help="sample that the formula must reproduce")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("samples", nargs="+")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("examples", parents=[common], help="built-in example corpus")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--run", metavar="NAME")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeGateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except GenericityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERIC
    except InstabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (MdiscError, ValueError, FitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
