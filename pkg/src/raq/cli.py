"""Command-line front end: ``raq info|word|betti|verify|splitting|hilbert|crosscheck``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import List, Optional

from .combinatorics import SimpleGraph, flag_complex, load_graph
from .coxeter import (
    CoxeterMatrix,
    abelianization_descriptors,
    build_system,
    is_right_angled,
    load_matrix,
)
from .homology import (
    DEFAULT_CELL_CAP,
    betti,
    classifying_space_betti,
    model_circle_pair,
    model_mobius_pair,
    model_rp_pair,
    polyhedral_product_complex,
    smash_summands,
)
from .quandle import AdElement, Phi, Reflection, ad_identity, ad_invert, ad_multiply, e, phi, pi
from .report import Report
from .spectral import E3Page, collapse_crosscheck
from .verify import SUITES, run_suite
from .words import Z, Z2, WordError, abelianize, parse_word

COMMANDS = ("info", "word", "betti", "verify", "splitting", "hilbert", "crosscheck")


class UsageError(ValueError):
    code = "E_USAGE"


@dataclass
class RunConfig:
    command: str
    graph: Optional[str] = None
    matrix: Optional[str] = None
    degree: int = 6
    model: str = "cw6"
    rp: Optional[int] = None
    cell_cap: int = DEFAULT_CELL_CAP
    fmt: str = "tsv"
    seed: int = 0
    samples: int = 1000

    def __post_init__(self):
        if self.degree < 0:
            raise UsageError("--degree must be non-negative")
        if self.cell_cap <= 0 or self.samples <= 0:
            raise UsageError("caps and sample counts must be positive")
        if self.rp is None:
            self.rp = self.degree + 1


def _graph(cfg: RunConfig) -> SimpleGraph:
    if cfg.graph:
        return load_graph(cfg.graph)
    if cfg.matrix:
        m = load_matrix(cfg.matrix)
        if not is_right_angled(m):
            raise UsageError("this command needs a right-angled system; give --graph or a right-angled --matrix")
        return build_system(m).gamma
    raise UsageError("--graph FILE is required")


def _emit(data, fmt: str, out) -> None:
    if isinstance(data, Report):
        print(data.render(fmt), file=out)
    elif fmt == "json":
        print(json.dumps(data, indent=2), file=out)
    else:
        for key, value in data.items():
            if isinstance(value, (list, dict)):
                value = json.dumps(value)
            print(f"{key}\t{value}", file=out)


def cmd_info(cfg: RunConfig) -> dict:
    if cfg.matrix:
        matrix = load_matrix(cfg.matrix)
    elif cfg.graph:
        matrix = CoxeterMatrix.from_graph(load_graph(cfg.graph))
    else:
        raise UsageError("info needs --graph or --matrix")
    sys_ = build_system(matrix)
    ab = abelianization_descriptors(sys_)
    return {
        "S": matrix.s_count,
        "right_angled": is_right_angled(matrix),
        "c": sys_.c,
        "W_ab": ab.w_ab,
        "A_ab": ab.a_ab,
        "Ad_ab": ab.ad_ab,
        "classes": [[s + 1 for s in cls] for cls in sys_.classes],
        "gamma_edges": [list(e) for e in sys_.gamma.sorted_edges()],
    }


_AD_TOKEN = re.compile(r"\s*e\(([^()]*)\)(?:\^(-?\d+))?\s*")


def parse_ad_expression(text: str, g: SimpleGraph) -> AdElement:
    """A product of tokens ``e(<Coxeter word>)`` or ``e(<word>)^k``; each word must be a reflection."""
    out = ad_identity(g)
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _AD_TOKEN.match(text, pos)
        if not match:
            raise WordError(f"bad Ad token at {text[pos:]!r}; expected e(<word>) or e(<word>)^k")
        x = Reflection.from_element(parse_word(match.group(1), g, Z2))
        k = int(match.group(2)) if match.group(2) else 1
        f = e(x) if k > 0 else ad_invert(e(x))
        for _ in range(abs(k)):
            out = ad_multiply(out, f)
        pos = match.end()
    return out


def cmd_word(cfg: RunConfig, mode: str, expression: str) -> dict:
    g = _graph(cfg)
    if mode == "W":
        w = parse_word(expression, g, Z2)
        return {"mode": "W", "normal_form": str(w), "length": len(w),
                "abelianization": list(abelianize(w)), "in_commutator_subgroup": not any(abelianize(w))}
    if mode == "A":
        w = parse_word(expression, g, Z)
        return {"mode": "A", "normal_form": str(w), "length": len(w),
                "abelianization": list(abelianize(w)), "pi": str(pi(w)), "Phi": Phi(w).to_json()}
    if mode == "Ad":
        a = parse_ad_expression(expression, g)
        return {"mode": "Ad", "element": a.to_json(), "phi": str(phi(a)), "ab": list(a.v)}
    raise UsageError(f"unknown mode {mode!r}")


def cmd_betti(cfg: RunConfig, space: str) -> dict:
    g = _graph(cfg)
    if space == "BW":
        pair = model_rp_pair(cfg.rp)
    elif space == "BA":
        pair = model_circle_pair()
    elif space == "BAd":
        pair = model_mobius_pair(cfg.model)
    else:
        raise UsageError(f"unknown space {space!r}")
    c = polyhedral_product_complex(flag_complex(g), pair, cfg.cell_cap)
    b = (betti(c, cfg.degree) + [0] * (cfg.degree + 1))[: cfg.degree + 1]
    return {"space": space, "degrees": list(range(cfg.degree + 1)), "betti": b}


def cmd_verify(cfg: RunConfig, suites: List[str]) -> List[Report]:
    g = _graph(cfg)
    reports = []
    for name in suites:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
        reports.extend(run_suite(name, g, cfg.degree, cfg.seed, cfg.model, cfg.samples, cfg.cell_cap))
    for r in reports:
        r.header.insert(0, f"seed={cfg.seed} D={cfg.degree} model={cfg.model}")
    return reports


def cmd_splitting(cfg: RunConfig) -> Report:
    g = _graph(cfg)
    D = cfg.degree
    k = flag_complex(g)
    rep = Report(f"stable summands of B Ad(X_W) for {g}", ["I"] + [f"deg{d}" for d in range(D + 1)] + ["kind"])
    rep.header.append(f"D={D} model={cfg.model}")
    totals = [0] * (D + 1)
    for subset, b in smash_summands(k, model_mobius_pair(cfg.model), D, cfg.cell_cap):
        kind = "BA-summand" if subset in k else "complement"
        rep.add(list(subset), *b, kind)
        totals = [x + y for x, y in zip(totals, b)]
    rep.add("total", *totals, "reduced B Ad")
    b_ad = classifying_space_betti(g, "BAd", D, cfg.model, cfg.cell_cap)
    b_a = classifying_space_betti(g, "BA", D, cfg.model, cfg.cell_cap)
    reduced_ad = [b_ad[0] - 1] + b_ad[1:]
    rep.add("B Ad (cellular)", *reduced_ad, "check", ok=reduced_ad == totals)
    rep.add("BA_W", *([b_a[0] - 1] + b_a[1:]), "reduced")
    diff = [x - y for x, y in zip(b_ad, b_a)]
    rep.add("X", *diff, "complement", ok=all(x >= 0 for x in diff))
    return rep


def cmd_hilbert(cfg: RunConfig) -> dict:
    g = _graph(cfg)
    page = E3Page(g, cfg.degree)
    return {"graph": g.to_json(), "D": cfg.degree, "e3": page.hilbert()}


def cmd_crosscheck(cfg: RunConfig) -> Report:
    return collapse_crosscheck(_graph(cfg), cfg.degree, cfg.model)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="raq", description=__doc__)
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("args", nargs="*", help="word: MODE EXPRESSION; betti: SPACE; verify: SUITE...")
    parser.add_argument("--graph")
    parser.add_argument("--matrix")
    parser.add_argument("--degree", "-D", type=int, default=6)
    parser.add_argument("--model", choices=("cw6", "simplicial20"), default="cw6")
    parser.add_argument("--rp", type=int, help="RP^N truncation for BW (default degree+1)")
    parser.add_argument("--format", dest="fmt", choices=("json", "tsv"), default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--cell-cap", type=int, default=DEFAULT_CELL_CAP)
    parser.add_argument("--mode", choices=("W", "A", "Ad"))
    parser.add_argument("--space", choices=("BW", "BA", "BAd"))
    parser.add_argument("--suites", help="comma-separated list; default all")
    return parser


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ns = build_parser().parse_intermixed_args(argv)
    default_fmt = "json" if ns.command in ("info", "word", "betti", "hilbert") else "tsv"
    cfg = RunConfig(ns.command, ns.graph, ns.matrix, ns.degree, ns.model, ns.rp, ns.cell_cap,
                    ns.fmt or default_fmt, ns.seed, ns.samples)
    args = list(ns.args)
    if ns.command == "info":
        _emit(cmd_info(cfg), cfg.fmt, out)
    elif ns.command == "word":
        mode = ns.mode or (args.pop(0) if args and args[0] in ("W", "A", "Ad") else "W")
        if not args:
            raise UsageError("word needs an expression")
        _emit(cmd_word(cfg, mode, " ".join(args)), cfg.fmt, out)
    elif ns.command == "betti":
        space = ns.space or (args[0] if args else "BAd")
        result = cmd_betti(cfg, space)
        if cfg.fmt == "json":
            _emit(result, "json", out)
        else:
            print("degree\tbetti", file=out)
            for d, b in zip(result["degrees"], result["betti"]):
                print(f"{d}\t{b}", file=out)
    elif ns.command == "verify":
        suites = ns.suites.split(",") if ns.suites else (args or list(SUITES))
        reports = cmd_verify(cfg, suites)
        for r in reports:
            _emit(r, cfg.fmt, out)
        return 0 if all(r.passed for r in reports) else 1
    elif ns.command == "splitting":
        rep = cmd_splitting(cfg)
        _emit(rep, cfg.fmt, out)
        return 0 if rep.passed else 1
    elif ns.command == "hilbert":
        _emit(cmd_hilbert(cfg), cfg.fmt, out)
    elif ns.command == "crosscheck":
        rep = cmd_crosscheck(cfg)
        _emit(rep, cfg.fmt, out)
        return 0 if rep.passed else 1
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    try:
        return run(argv)
    except (OSError, ValueError, RuntimeError) as exc:
        code = getattr(exc, "code", "E_IO" if isinstance(exc, OSError) else "E_INPUT")
        print(f"raq: error [{code}]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
