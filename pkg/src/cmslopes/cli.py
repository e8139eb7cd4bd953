"""Command-line front end.

Exit status: 0 success, 1 verification mismatch (report still printed),
2 invalid input. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .cmtypes import CMTypeError, parse_cm_type, shimura_taniyama_slopes, validate_cm_type
from .groups import (
    cyclic,
    element_order,
    frobenius_subgroup,
    parse_group,
    subgroup_of_order,
    units_mod,
)
from .honda import PointCountCache, honda_predict, honda_verify
from .slopes import enumerate_symmetric_integral, is_ordinary, is_supersingular
from .theorems import construct_field_params, standard_cm_type, survey, theorem23_beta

CACHE_ENV = "CMSLOPES_CACHE"


@dataclass
class CommandConfig:
    subcommand: str
    params: dict = field(default_factory=dict)
    output_mode: str = "table"
    cache_path: str | None = None


class UsageError(ValueError):
    pass


def _kind(seq) -> str:
    if is_ordinary(seq):
        return "ordinary"
    if is_supersingular(seq):
        return "supersingular"
    return "-"


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def _cmd_enumerate(cfg: CommandConfig, out) -> int:
    g = cfg.params["g"]
    if g < 1:
        raise UsageError("--g must be at least 1")
    seqs = sorted(enumerate_symmetric_integral(g))
    if cfg.output_mode == "json":
        _emit([s.to_json() for s in seqs], out)
    else:
        out.write(f"symmetric integral slope sequences, g={g}: N={len(seqs)}\n")
        for s in seqs:
            out.write(f"  {s}\n")
    return 0


def _cmd_cm_slopes(cfg: CommandConfig, out) -> int:
    P = cfg.params
    G = parse_group(P["group"])
    cm = parse_cm_type(G, P["cm_type"]) if P.get("cm_type") else None
    if cm is None:
        cm = validate_cm_type(G, range(G.identity, G.identity + G.order // 2))
    if P.get("p") is not None:
        if G.kind != "units":
            raise UsageError("--p needs a units:<ell> group")
        D = frobenius_subgroup(G.modulus, P["p"])
    elif P.get("f") is not None:
        D = subgroup_of_order(G, P["f"])
    else:
        raise UsageError("one of --f or --p is required")
    seq = shimura_taniyama_slopes(cm, D)
    if cfg.output_mode == "json":
        _emit({"group": str(G), "cm_type": list(cm.phi), "subgroup": list(D.elements),
               "f": D.order, "slopes": seq.to_json()}, out)
    else:
        out.write(f"group {G}, phi={list(cm.phi)}, D={list(D.elements)} (f={D.order})\n")
        out.write(f"slopes {seq}  [{_kind(seq)}]\n")
    return 0


def _cmd_survey(cfg: CommandConfig, out) -> int:
    g = cfg.params["g"]
    if g < 1:
        raise UsageError("--g must be at least 1")
    if cfg.params.get("cm_type"):
        cm = parse_cm_type(cyclic(2 * g), cfg.params["cm_type"])
    else:
        cm = standard_cm_type(g)
    rep = survey(cm)
    if cfg.output_mode == "json":
        _emit(rep.to_json(), out)
        return 0
    witnesses = set(rep.half_valued_witnesses())
    out.write(f"g={g}  group={cm.group}  phi={list(cm.phi)}\n")
    out.write("achievable (by f = |D_p|):\n")
    for f, s in rep.achievable.items():
        out.write(f"  f={f:<4d} {s}  [{_kind(s)}]\n")
    out.write(f"M-count {rep.m_count}  bound {rep.m_bound}  N {rep.n_count}\n")
    out.write(f"missing ({len(rep.missing)}):\n")
    for s in sorted(rep.missing):
        mark = "  *" if s in witnesses else ""
        out.write(f"  {s}{mark}\n")
    if witnesses:
        out.write("* = {0, 1/2, 1}-valued witness\n")
    return 0


def _cmd_construct(cfg: CommandConfig, out) -> int:
    g = cfg.params["g"]
    if g < 1:
        raise UsageError("--g must be at least 1")
    fp = construct_field_params(g)
    if cfg.output_mode == "json":
        _emit({"g": fp.g, "ell": fp.ell, "m": fp.m}, out)
    else:
        out.write(f"g={fp.g}  ell={fp.ell}  m={fp.m}  (ell = {1 + 2 * g} mod {4 * g})\n")
    return 0


def _cmd_beta(cfg: CommandConfig, out) -> int:
    g = cfg.params["g"]
    if g < 2:
        raise UsageError("--g must be at least 2")
    b = theorem23_beta(g)
    if cfg.output_mode == "json":
        _emit({"g": g, "f0": b.f0, "beta": b.beta.to_json()}, out)
    else:
        out.write(f"g={g}  f0={b.f0 if b.f0 is not None else '-'}\nbeta {b.beta}\n")
    return 0


def _cmd_honda(cfg: CommandConfig, out) -> int:
    ell, p = cfg.params["ell"], cfg.params["p"]
    if not cfg.params.get("verify"):
        pred = honda_predict(ell, p)
        f = element_order(units_mod(ell), p % ell)
        if cfg.output_mode == "json":
            _emit({"ell": ell, "p": p, "g": (ell - 1) // 2, "f": f, "predicted": pred.to_json()}, out)
        else:
            out.write(f"ell={ell} p={p} f={f}\npredicted {pred}  [{_kind(pred)}]\n")
        return 0
    cache = PointCountCache(cfg.cache_path) if cfg.cache_path else None
    rep = honda_verify(ell, p, cache=cache, workers=cfg.params.get("workers", 1))
    if cfg.output_mode == "json":
        _emit(rep.to_json(), out)
    else:
        out.write(f"ell={ell} p={p} g={rep.curve.g} f={rep.f}\n")
        for k, m in sorted(rep.moduli.items()):
            out.write(f"  F_{p}^{k} modulus {m}\n")
        out.write(f"counts N_1..N_{rep.curve.g}: {rep.counts}\n")
        out.write(f"L-polynomial coefficients: {list(rep.l_poly.coefficients)}\n")
        out.write(f"predicted {rep.predicted}  [{_kind(rep.predicted)}]\n")
        out.write(f"computed  {rep.computed}  [{_kind(rep.computed)}]\n")
        out.write(f"cross-check N_{rep.cross_check_k}: counted {rep.cross_check_counted}, "
                  f"from L-polynomial {rep.cross_check_predicted}\n")
        out.write(f"match={str(rep.match).lower()} cross_check={str(rep.cross_check_ok).lower()}\n")
    return 0 if rep.ok else 1


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "cm-slopes": _cmd_cm_slopes,
    "survey": _cmd_survey,
    "construct": _cmd_construct,
    "beta": _cmd_beta,
    "honda": _cmd_honda,
}


def run(cfg: CommandConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        return COMMANDS[cfg.subcommand](cfg, out)
    except (UsageError, CMTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cmslopes", description="Newton polygons of reductions of CM abelian varieties")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        return sp

    sp = add("enumerate", "list all symmetric integral slope sequences of length 2g")
    sp.add_argument("--g", type=int, required=True)

    sp = add("cm-slopes", "Shimura-Taniyama slopes for one (phi, D) pair")
    sp.add_argument("--group", required=True, help="cyclic:<n> or units:<ell>")
    sp.add_argument("--cm-type", help="comma-separated elements (default: interval type)")
    sp.add_argument("--f", type=int, help="order of the decomposition subgroup")
    sp.add_argument("--p", type=int, help="prime; uses D_p = <p> in (Z/ellZ)^x")

    sp = add("survey", "achievable and missing slope sequences on Z/2gZ")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--cm-type", help="comma-separated elements of Z/2gZ (default 0..g-1)")

    sp = add("construct", "smallest prime ell = 1+2g mod 4g")
    sp.add_argument("--g", type=int, required=True)

    sp = add("beta", "slope sequence missed by every CM variety with Galois CM field of degree 2g")
    sp.add_argument("--g", type=int, required=True)

    sp = add("honda", "prediction (and optional point-count verification) for y^2 = 1 - x^ell")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="count points and compare Newton polygons")
    sp.add_argument("--cache", default=os.environ.get(CACHE_ENV), help=f"point-count cache (env {CACHE_ENV})")
    sp.add_argument("--workers", type=int, default=1)
    return parser


def parse_config(argv=None) -> CommandConfig:
    ns = vars(build_parser().parse_args(argv))
    sub = ns.pop("subcommand")
    mode = "json" if ns.pop("json") else "table"
    cache = ns.pop("cache", None)
    return CommandConfig(sub, ns, mode, cache)


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
