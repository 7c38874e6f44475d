"""Batch command-line surface over the engines.

Reads graphs in the shared edge-list format (`n m` header, then one `u v`
line per edge; duplicates are parallel edges, `u u` is a loop), runs one
computation per invocation, and emits text or versioned JSON.  Exit codes:
0 success, 2 malformed input, 3 size cap exceeded, 4 internal invariant or
cross-engine verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
from dataclasses import dataclass

from .collapse import build_collapse_graph, verify_collapse_structure
from .corpus import connected_simple_graphs, random_gnp_graph
from .errors import CapExceededError, GraphInputError, InternalInvariantError
from .graphs import parse_edge_list
from .kappa import kappa, kappa_with_trace
from .orientations import (
    DEFAULT_BRUTE_FORCE_CAP,
    PathSpec,
    _no_incoming,
    cut_equivalence_classes,
    enumerate_acyclic,
    kappa_partition_bruteforce,
    normalize_to_unique_source,
    nu_path,
    unique_source_orientations,
)
from .tutte import tutte_eval, tutte_polynomial

SCHEMA_VERSION = 1
CAP_ENV_VAR = "KAPPA_BRUTE_CAP"

COMMANDS = (
    "kappa",
    "alpha",
    "tutte",
    "eval",
    "classes",
    "transversal",
    "collapse",
    "nu",
    "verify",
)


@dataclass
class RunConfig:
    command: str
    input_path: str = "-"
    format: str = "text"
    brute_force_cap: int = DEFAULT_BRUTE_FORCE_CAP
    seed: int = 0
    point: tuple | None = None
    trace: bool = False
    vertex: int | None = None
    edge: int | None = None
    path_json: str | None = None
    corpus: str | None = None
    random_corpus: int | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise GraphInputError(f"unknown command {self.command!r}")
        if self.brute_force_cap < 1:
            raise GraphInputError("brute-force cap must be at least 1")
        if self.command == "eval" and self.point is None:
            raise GraphInputError("eval requires --point X Y")
        if self.command != "eval" and self.point is not None:
            raise GraphInputError("--point only applies to eval")


def _read_input(config):
    if config.input_path == "-":
        text = sys.stdin.read()
        descriptor = {"path": "-"}
    else:
        try:
            with open(config.input_path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphInputError(f"cannot read {config.input_path}: {exc}") from None
        descriptor = {"path": config.input_path}
    descriptor["sha256"] = hashlib.sha256(text.encode()).hexdigest()
    return parse_edge_list(text), descriptor


def _payload(config, descriptor, body):
    payload = {"schema": SCHEMA_VERSION, "command": config.command}
    payload["input"] = descriptor
    payload.update(body)
    return payload


def _emit(config, payload, text_lines):
    if config.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_kappa(config):
    g, descriptor = _read_input(config)
    if config.trace:
        result = kappa_with_trace(g)
        body = {"value": result.value, "trace": result.trace.to_json()}
        lines = [str(result.value), json.dumps(result.trace.to_json(), sort_keys=True)]
    else:
        result = kappa(g)
        body = {
            "value": result.value,
            "cache": {
                "hits": result.cache_stats.hits,
                "misses": result.cache_stats.misses,
            },
        }
        lines = [str(result.value)]
    _emit(config, _payload(config, descriptor, body), lines)
    return 0


def _cmd_alpha(config):
    g, descriptor = _read_input(config)
    brute = len(enumerate_acyclic(g, config.brute_force_cap))
    via_tutte = tutte_eval(g, 2, 0)
    ok = brute == via_tutte
    body = {"bruteforce": brute, "tutte": via_tutte, "ok": ok}
    lines = [f"bruteforce {brute}", f"tutte {via_tutte}"]
    if not ok:
        lines.append("MISMATCH")
    _emit(config, _payload(config, descriptor, body), lines)
    return 0 if ok else 4


def _cmd_tutte(config):
    g, descriptor = _read_input(config)
    poly = tutte_polynomial(g)
    body = {"coefficients": poly.to_json_triples(), "text": poly.to_text()}
    _emit(config, _payload(config, descriptor, body), [poly.to_text()])
    return 0


def _cmd_eval(config):
    g, descriptor = _read_input(config)
    x, y = config.point
    value = tutte_eval(g, x, y)
    body = {"point": [x, y], "value": value}
    _emit(config, _payload(config, descriptor, body), [str(value)])
    return 0


def _cmd_classes(config):
    g, descriptor = _read_input(config)
    part = kappa_partition_bruteforce(g, config.brute_force_cap)
    classes = [
        {
            "representative": cls[0].hex,
            "size": len(cls),
            "members": [o.hex for o in cls],
        }
        for cls in part.classes
    ]
    body = {"class_count": part.class_count, "classes": classes}
    lines = [f"classes {part.class_count}"]
    lines.extend(
        f"class {i}: size {c['size']} representative {c['representative']}"
        for i, c in enumerate(classes)
    )
    _emit(config, _payload(config, descriptor, body), lines)
    return 0


def _cmd_transversal(config):
    if config.vertex is None:
        raise GraphInputError("transversal requires --vertex")
    g, descriptor = _read_input(config)
    found = unique_source_orientations(g, config.vertex, config.brute_force_cap)
    body = {
        "vertex": config.vertex,
        "count": len(found),
        "orientations": [o.hex for o in found],
    }
    lines = [f"count {len(found)}"]
    lines.extend(o.hex for o in found)
    _emit(config, _payload(config, descriptor, body), lines)
    return 0


def _cmd_collapse(config):
    if config.edge is None:
        raise GraphInputError("collapse requires --edge")
    g, descriptor = _read_input(config)
    cg = build_collapse_graph(g, config.edge, config.brute_force_cap)
    report = verify_collapse_structure(cg, config.brute_force_cap)
    dot = cg.to_dot()
    body = {"report": report.to_json(), "dot": dot}
    lines = [f"{name} {'ok' if ok else 'VIOLATED'}" for name, ok in report.checks.items()]
    lines.extend(f"{k} {v}" for k, v in sorted(report.counts.items()))
    lines.append(dot.rstrip("\n"))
    _emit(config, _payload(config, descriptor, body), lines)
    return 0 if report.ok else 4


def _cmd_nu(config):
    if config.path_json is None:
        raise GraphInputError("nu requires --path JSON")
    try:
        raw = json.loads(config.path_json)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"malformed --path JSON: {exc}") from None
    spec = PathSpec.from_json(raw)
    g, descriptor = _read_input(config)
    if spec.closed:
        part = kappa_partition_bruteforce(g, config.brute_force_cap)
        values = [
            {"class": i, "representative": rep.hex, "nu": nu_path(rep, spec)}
            for i, rep in enumerate(part.representatives)
        ]
        lines = [
            f"class {v['class']} representative {v['representative']}: {v['nu']}"
            for v in values
        ]
        body = {"path": spec.to_json(), "per_class": values}
    else:
        values = [
            {"orientation": o.hex, "nu": nu_path(o, spec)}
            for o in enumerate_acyclic(g, config.brute_force_cap)
        ]
        lines = [f"{v['orientation']}: {v['nu']}" for v in values]
        body = {"path": spec.to_json(), "per_orientation": values}
    _emit(config, _payload(config, descriptor, body), lines)
    return 0


def _verify_graph(g, cap):
    """Cross-engine differential checks for one graph."""
    part = kappa_partition_bruteforce(g, cap)
    k_brute = part.class_count
    k_recursion = kappa(g).value
    k_tutte = tutte_eval(g, 1, 0)
    alpha_brute = sum(len(cls) for cls in part.classes)
    alpha_tutte = tutte_eval(g, 2, 0)
    cut_classes = cut_equivalence_classes(g, cap)
    cut_ok = cut_classes == part.as_bit_classes()

    connected = g.is_connected
    transversal_ok = True
    if connected:
        for v in range(g.n_vertices):
            found = unique_source_orientations(part.graph, v, cap)
            if len(found) != k_brute:
                transversal_ok = False
                break
            hit_classes = sorted(part.class_of_bits(o.bits) for o in found)
            if hit_classes != list(range(k_brute)):
                transversal_ok = False
                break
            for i, rep in enumerate(part.representatives):
                target, _ = normalize_to_unique_source(rep, v)
                if part.class_of_bits(target.bits) != i or _no_incoming(
                    target.graph, target.bits
                ) != [v]:
                    transversal_ok = False
                    break
            if not transversal_ok:
                break

    checks = {
        "kappa_triple": {
            "bruteforce": k_brute,
            "recursion": k_recursion,
            "tutte_1_0": k_tutte,
            "ok": k_brute == k_recursion == k_tutte,
        },
        "alpha": {
            "bruteforce": alpha_brute,
            "tutte_2_0": alpha_tutte,
            "ok": alpha_brute == alpha_tutte,
        },
        "cut_equivalence": {"ok": cut_ok},
        "transversal": {"ok": transversal_ok, "skipped": not connected},
    }
    ok = all(c["ok"] for c in checks.values())
    return checks, ok


def _cmd_verify(config):
    entries = []
    descriptor = {}
    if config.corpus == "small":
        for i, g in enumerate(connected_simple_graphs(5)):
            entries.append((f"small/{i}", g, None))
        descriptor["corpus"] = "small"
        descriptor["corpus_size"] = len(entries)
    elif not config.random_corpus:
        g, descriptor = _read_input(config)
        entries.append(("input/0", g, None))
    if config.random_corpus:
        rng = random.Random(config.seed)
        for i in range(config.random_corpus):
            g, params = random_gnp_graph(rng)
            entries.append((f"gnp/{i}", g, params))
        descriptor["random_corpus"] = {
            "count": config.random_corpus,
            "generator": "gnp, n uniform in 2..8, p uniform in 0.2..0.8",
        }

    graphs_out = []
    failures = 0
    lines = []
    for label, g, params in entries:
        checks, ok = _verify_graph(g, config.brute_force_cap)
        if not ok:
            failures += 1
        entry = {
            "label": label,
            "n_vertices": g.n_vertices,
            "edges": [list(e) for e in g.edges],
            "sha256": g.sha256(),
            "checks": checks,
            "ok": ok,
        }
        if params is not None:
            entry["params"] = params
        graphs_out.append(entry)
        lines.append(f"{label} {'ok' if ok else 'FAIL'}")
    body = {
        "seed": config.seed,
        "cap": config.brute_force_cap,
        "graphs": graphs_out,
        "summary": {"graphs": len(entries), "failures": failures},
        "ok": failures == 0,
    }
    lines.append(f"graphs {len(entries)} failures {failures}")
    _emit(config, _payload(config, descriptor, body), lines)
    return 0 if failures == 0 else 4


_HANDLERS = {
    "kappa": _cmd_kappa,
    "alpha": _cmd_alpha,
    "tutte": _cmd_tutte,
    "eval": _cmd_eval,
    "classes": _cmd_classes,
    "transversal": _cmd_transversal,
    "collapse": _cmd_collapse,
    "nu": _cmd_nu,
    "verify": _cmd_verify,
}


def run(config):
    """Dispatch one command; prints the report and returns the exit code."""
    return _HANDLERS[config.command](config)


def _default_cap():
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_BRUTE_FORCE_CAP
    try:
        return int(raw)
    except ValueError:
        raise GraphInputError(
            f"{CAP_ENV_VAR} must be an integer, got {raw!r}"
        ) from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kappatools",
        description="Count and dissect source-to-sink classes of acyclic orientations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="edge-list file or '-'")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--cap", type=int, default=None, help="brute-force edge cap")
        p.add_argument("--seed", type=int, default=0)
        return p

    p = add("kappa", "class count by the deletion/contraction recursion")
    p.add_argument("--trace", action="store_true", help="attach the recursion tree")
    add("alpha", "acyclic orientation count, brute force and Tutte at (2,0)")
    add("tutte", "full Tutte polynomial")
    p = add("eval", "Tutte polynomial value at an integer point")
    p.add_argument("--point", type=int, nargs=2, metavar=("X", "Y"), required=True)
    add("classes", "brute-force click-class partition")
    p = add("transversal", "orientations whose unique source is a fixed vertex")
    p.add_argument("--vertex", type=int, required=True)
    p = add("collapse", "collapse graph at a cycle-edge: DOT plus structure report")
    p.add_argument("--edge", type=int, required=True)
    p = add("nu", "signed edge count along a path, per class or per orientation")
    p.add_argument("--path", required=True, help='JSON {"vertices": [...], "closed": bool}')
    p = add("verify", "cross-engine differential suite")
    p.add_argument("--corpus", choices=("small",), default=None)
    p.add_argument("--random-corpus", type=int, default=None, metavar="N")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cap = args.cap if args.cap is not None else _default_cap()
        config = RunConfig(
            command=args.command,
            input_path=args.input,
            format=args.format,
            brute_force_cap=cap,
            seed=args.seed,
            point=tuple(args.point) if getattr(args, "point", None) else None,
            trace=getattr(args, "trace", False),
            vertex=getattr(args, "vertex", None),
            edge=getattr(args, "edge", None),
            path_json=getattr(args, "path", None),
            corpus=getattr(args, "corpus", None),
            random_corpus=getattr(args, "random_corpus", None),
        )
        return run(config)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
