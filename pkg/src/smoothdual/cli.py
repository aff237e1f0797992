"""Command-line front end.

    smoothdual catalog --inventory inv.json --n 2
    smoothdual param eval param.json --inventory inv.json [--q 3]
    smoothdual param homotopy param.json --inventory inv.json --t 1/2
    smoothdual check diagram --seed 7 --samples 10000

Exit codes: 0 ok, 1 bad input, 2 a property check found counterexamples.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import checks
from .arith import parse_rational, twist_to_complex
from .errors import ValidationError
from .homology import block_components
from .params import (
    WDParam,
    alpha,
    beta,
    infinitesimal_character,
    langlands_data,
    validate_param,
)
from .spectrum import Inventory, component_catalog, enumerate_inertial_classes, ordinary_quotient_shape
from .tempered import homotopy, is_tempered, retract, stratum_of

EXIT_OK, EXIT_INVALID, EXIT_CHECK_FAILED = 0, 1, 2
U64_MAX = 2**64 - 1


@dataclass
class RunConfig:
    inventory_path: str | None
    n: int | None
    q: int | None = None
    seed: int = 0
    samples: int | None = None

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise ValidationError(f"--n must be >= 1, got {self.n}")
        if self.q is not None and self.q < 2:
            raise ValidationError(f"--q must be >= 2, got {self.q}")
        if not 0 <= self.seed <= U64_MAX:
            raise ValidationError(f"--seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.samples is not None and self.samples < 1:
            raise ValidationError(f"--samples must be >= 1, got {self.samples}")


def load_json(path, what):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {what} file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{what} file is not valid JSON: {exc}", path) from None


def load_inventory(path) -> Inventory:
    try:
        return Inventory.from_json(load_json(path, "inventory"))
    except ValidationError as exc:
        if exc.location and exc.location.startswith(str(path)):
            raise
        raise ValidationError(str(exc), str(path)) from None


def cmd_catalog(config: RunConfig) -> dict:
    if config.inventory_path is None:
        raise ValidationError("catalog needs --inventory")
    if config.n is None:
        raise ValidationError("catalog needs --n")
    inv = load_inventory(config.inventory_path)
    classes = []
    for cls in enumerate_inertial_classes(inv, config.n):
        rows = block_components(cls)
        classes.append({
            "class": cls.to_json(),
            "ordinary_quotient": [[c, m] for c, m in ordinary_quotient_shape(cls)],
            "components": [
                {
                    "component": index.to_json(),
                    "shape": shape.to_json(),
                    "K": shape.K,
                    "poincare": poly.to_json(),
                    "hp": list(hp),
                }
                for index, shape, poly, hp in rows
            ],
            "block_hp": [sum(r[3][0] for r in rows), sum(r[3][1] for r in rows)],
        })
    return {
        "n": config.n,
        "inventory": inv.to_json(),
        "classes": classes,
        "total_hp": [sum(c["block_hp"][0] for c in classes), sum(c["block_hp"][1] for c in classes)],
    }


def _numeric(z, q):
    re, im = twist_to_complex(z, q)
    return [round(re, 12) + 0.0, round(im, 12) + 0.0]


def cmd_param(config: RunConfig, param_path, action, t=None) -> dict:
    if config.inventory_path is None:
        raise ValidationError("param needs --inventory")
    inv = load_inventory(config.inventory_path)
    raw = load_json(param_path, "parameter")
    try:
        p = WDParam.from_json(raw)
        if config.n is not None and p.n != config.n:
            raise ValidationError(f"--n {config.n} disagrees with parameter n = {p.n}")
        p = validate_param(p, inv)
    except ValidationError as exc:
        raise ValidationError(str(exc), str(param_path)) from None

    if action == "eval":
        x = alpha(p)
        support = infinitesimal_character(p)
        report = {
            "param": p.to_json(),
            "alpha": x.to_json(),
            "beta_alpha": beta(x).to_json(),
            "inf_ch": support.to_json(),
            "langlands_data": [seg.to_json() for seg in langlands_data(p)],
            "stratum": stratum_of(p).to_json(),
            "tempered": is_tempered(p),
        }
        if config.q is not None:
            report["numeric"] = {
                "q": config.q,
                "segments": [_numeric(seg.twist, config.q) for seg in p.segments],
                "inf_ch": [_numeric(z, config.q) for _, z in support.support],
            }
        return report
    if action == "retract":
        result = retract(p)
    elif action == "homotopy":
        if t is None:
            raise ValidationError("homotopy needs --t")
        result = homotopy(p, parse_rational(t, "--t"))
    else:
        raise ValidationError(f"unknown param action {action!r}")
    report = {"action": action, "input": p.to_json(), "result": result.to_json()}
    if action == "homotopy":
        report["t"] = t
    if config.q is not None:
        report["numeric"] = {"q": config.q, "segments": [_numeric(seg.twist, config.q) for seg in result.segments]}
    return report


def cmd_check(config: RunConfig, name, max_mult=4) -> dict:
    inv = load_inventory(config.inventory_path) if config.inventory_path else None
    if name == "injectivity":
        return checks.check_injectivity(config.seed, config.samples or 1000, inv, max_mult)
    if name not in checks.CHECKS:
        raise ValidationError(f"unknown check {name!r}")
    max_n = config.n or 8
    try:
        return checks.CHECKS[name](config.seed, config.samples or 10000, max_n, inv)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--inventory", metavar="PATH")
    common.add_argument("--n", type=int)
    common.add_argument("--q", type=int, help="render twists numerically for this residue field size")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int)
    common.add_argument("--json-out", metavar="PATH", help="write the report here instead of stdout")

    parser = _Parser(prog="smoothdual", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("catalog", parents=[common], help="components of the extended quotient for GL(n)")

    param = sub.add_parser("param", parents=[common], help="evaluate or deform a parameter file")
    param.add_argument("action", choices=["eval", "retract", "homotopy"])
    param.add_argument("param_file")
    param.add_argument("--t", help="homotopy time, exact rational in [0, 1]")

    check = sub.add_parser("check", parents=[common], help="randomized property suites")
    check.add_argument("name", choices=sorted(checks.CHECKS))
    check.add_argument("--max-mult", type=int, default=4, help="injectivity: largest label multiplicity")
    return parser


def emit(report, path=None):
    text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(args.inventory, args.n, args.q, args.seed, args.samples)
        if args.command == "catalog":
            report = cmd_catalog(config)
        elif args.command == "param":
            report = cmd_param(config, args.param_file, args.action, args.t)
        else:
            report = cmd_check(config, args.name, args.max_mult)
    except ValidationError as exc:
        print(f"smoothdual: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    emit(report, args.json_out)
    if args.command == "check" and not report["passed"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
