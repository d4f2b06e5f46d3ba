"""Command-line front end: generators, covering sequences, counting,
encoding, baseline comparison, and batch experiments.

Every command is deterministic given its arguments and seeds; rerunning
produces byte-identical output.  JSON outputs carry a ``schema`` field
("rnp-kit/1").  Exit codes: 0 success, 1 internal error, 2 user error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .counting import count_induced, count_noninduced
from .covering import family_covering_sequence, is_vertex_covering_sequence, min_r1_covering_sequence
from .encoder import (
    encoding_digest,
    graph_readout,
    rnp_encode_nodes,
    update_bound,
)
from .generators import erdos_renyi, pattern, prime_partite, random_regular_perturbed
from .graphs import Graph, parse_graph, serialize_graph
from .wl import wl_distinguish, wl_refine

SCHEMA = "rnp-kit/1"

EXIT_INTERNAL_ERROR = 1
EXIT_USER_ERROR = 2


class UserError(Exception):
    """Bad input from the user; reported on stderr with exit code 2."""


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise UserError(f"{path}: {exc.strerror or exc}") from exc
    except ValueError as exc:
        raise UserError(f"{path}: {exc}") from exc


def _parse_radii(text: str) -> tuple[int, ...]:
    try:
        radii = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UserError(f"bad radii '{text}': expected comma-separated integers") from None
    if not radii or any(r < 0 for r in radii):
        raise UserError(f"bad radii '{text}': need one or more nonnegative integers")
    return radii


def _emit_json(payload: dict, out) -> None:
    out.write(json.dumps(payload) + "\n")


def _write_text(text: str, path: str | None, out) -> None:
    if path is None:
        out.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _cmd_gen(args, out) -> int:
    if args.family == "er":
        graph = erdos_renyi(args.n, args.p, args.seed)
        _write_text(serialize_graph(graph), args.out, out)
    elif args.family == "regular":
        graph = random_regular_perturbed(args.n, args.d, args.delete, args.seed)
        _write_text(serialize_graph(graph), args.out, out)
    elif args.family == "prime-partite":
        try:
            primes = [int(p) for p in args.primes.split(",")]
        except ValueError:
            raise UserError(f"bad primes '{args.primes}'") from None
        graph = prime_partite(primes, args.n)
        _write_text(serialize_graph(graph), args.out, out)
    else:  # pattern
        result = pattern(args.name, args.size)
        if isinstance(result, tuple):
            text = serialize_graph(result[0])
            text += "# --- second graph ---\n"
            text += serialize_graph(result[1])
        else:
            text = serialize_graph(result)
        _write_text(text, args.out, out)
    return 0


def _cmd_cover(args, out) -> int:
    graph = _load_graph(args.graph)
    radii, order = min_r1_covering_sequence(graph)
    valid = is_vertex_covering_sequence(graph, order, radii)
    _emit_json(
        {
            "schema": SCHEMA,
            "radii": list(radii),
            "order": list(order),
            "valid": valid,
        },
        out,
    )
    return 0


def _cmd_count(args, out) -> int:
    graph = _load_graph(args.graph)
    pat = _load_graph(args.pattern)
    counter = count_induced if args.mode == "induced" else count_noninduced
    _emit_json(
        {
            "schema": SCHEMA,
            "pattern": args.pattern,
            "mode": args.mode,
            "count": counter(graph, pat),
        },
        out,
    )
    return 0


def _cmd_encode(args, out) -> int:
    graph = _load_graph(args.graph)
    radii = _parse_radii(args.radii)
    encodings, counter = rnp_encode_nodes(graph, radii)
    _emit_json(
        {
            "schema": SCHEMA,
            "digest": encoding_digest(graph_readout(encodings.values())),
            "updates": counter.invocations,
            "bound": update_bound(graph, radii),
        },
        out,
    )
    return 0


def _cmd_distinguish(args, out) -> int:
    g1 = _load_graph(args.graph1)
    g2 = _load_graph(args.graph2)
    radii = _parse_radii(args.radii)
    encodings1, _ = rnp_encode_nodes(g1, radii)
    encodings2, _ = rnp_encode_nodes(g2, radii)
    rnp = graph_readout(encodings1.values()) != graph_readout(encodings2.values())
    _emit_json(
        {
            "schema": SCHEMA,
            "rnp": rnp,
            "wl": wl_distinguish(g1, g2),
            "radii": list(radii),
        },
        out,
    )
    return 0


def _cmd_complexity(args, out) -> int:
    graph = _load_graph(args.graph)
    radii = _parse_radii(args.radii)
    _, counter = rnp_encode_nodes(graph, radii)
    bound = update_bound(graph, radii)
    ratio = counter.invocations / bound if bound else 0.0
    _emit_json(
        {
            "schema": SCHEMA,
            "updates": counter.invocations,
            "bound": bound,
            "ratio": ratio,
        },
        out,
    )
    return 0


_SPEC_KEYS = {"generator", "trials", "base_seed", "patterns", "radii", "checks", "mode"}
_GENERATOR_KEYS = {
    "er": {"kind", "n", "p"},
    "regular": {"kind", "n", "d", "delete"},
}
_KNOWN_CHECKS = ("theorem1", "theorem3")


def _load_experiment_spec(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise UserError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise UserError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(spec, dict):
        raise UserError(f"{path}: spec must be a JSON object")
    unknown = set(spec) - _SPEC_KEYS
    if unknown:
        raise UserError(f"{path}: unknown spec fields {sorted(unknown)}")
    missing = {"generator", "trials", "base_seed", "patterns", "radii"} - set(spec)
    if missing:
        raise UserError(f"{path}: missing spec fields {sorted(missing)}")
    gen = spec["generator"]
    if not isinstance(gen, dict) or "kind" not in gen:
        raise UserError(f"{path}: generator must be an object with a 'kind'")
    if gen["kind"] not in _GENERATOR_KEYS:
        raise UserError(f"{path}: unknown generator kind '{gen['kind']}'")
    extra = set(gen) - _GENERATOR_KEYS[gen["kind"]]
    if extra:
        raise UserError(f"{path}: unknown generator fields {sorted(extra)}")
    for check in spec.get("checks", []):
        if check not in _KNOWN_CHECKS:
            raise UserError(f"{path}: unknown check '{check}'")
    mode = spec.get("mode", "induced")
    if mode not in ("induced", "noninduced"):
        raise UserError(f"{path}: mode must be 'induced' or 'noninduced'")
    return spec


def _generate_trial(gen: dict, seed: int) -> tuple[Graph, str]:
    if gen["kind"] == "er":
        label = f"er(n={gen['n']},p={gen['p']})"
        return erdos_renyi(gen["n"], gen["p"], seed), label
    label = f"regular(n={gen['n']},d={gen['d']},delete={gen['delete']})"
    return (
        random_regular_perturbed(gen["n"], gen["d"], gen["delete"], seed),
        label,
    )


def _cmd_experiment(args, out) -> int:
    spec = _load_experiment_spec(args.spec)
    patterns = [_load_graph(p) for p in spec["patterns"]]
    if spec["radii"] == "auto":
        if not patterns:
            raise UserError("radii 'auto' requires at least one pattern")
        radii = family_covering_sequence(patterns)
    elif isinstance(spec["radii"], list) and all(
        isinstance(r, int) and r >= 0 for r in spec["radii"]
    ) and spec["radii"]:
        radii = tuple(spec["radii"])
    else:
        raise UserError("radii must be 'auto' or a nonempty list of nonnegative integers")
    checks = list(spec.get("checks", []))
    mode = spec.get("mode", "induced")
    counter_fn = count_induced if mode == "induced" else count_noninduced

    header = ["trial", "seed", "generator", "n", "radii"]
    header += [f"count:{p}" for p in spec["patterns"]]
    header += ["digest", "updates", "bound", "rnp_distinct", "wl_distinct"]
    if "theorem1" in checks:
        header.append("theorem1_violations")
    if "theorem3" in checks:
        header.append("theorem3_ok")

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    previous: list[tuple[tuple[int, ...], bytes, str]] = []
    radii_text = ",".join(str(r) for r in radii)
    for trial in range(spec["trials"]):
        seed = spec["base_seed"] + trial
        graph, label = _generate_trial(spec["generator"], seed)
        counts = tuple(counter_fn(graph, p) for p in patterns)
        encodings, counter = rnp_encode_nodes(graph, radii)
        encoding = graph_readout(encodings.values())
        wl_key = json.dumps(wl_refine(graph), sort_keys=True)
        row = [
            trial,
            seed,
            label,
            graph.node_count,
            radii_text,
            *counts,
            encoding_digest(encoding)[:16],
            counter.invocations,
            update_bound(graph, radii),
            all(encoding != enc for _, enc, _ in previous),
            all(wl_key != key for _, _, key in previous),
        ]
        if "theorem1" in checks:
            row.append(
                sum(
                    1
                    for prior_counts, enc, _ in previous
                    if prior_counts != counts and enc == encoding
                )
            )
        if "theorem3" in checks:
            row.append(counter.invocations <= update_bound(graph, radii))
        writer.writerow(row)
        previous.append((counts, encoding, wl_key))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rnpkit",
        description="Recursive neighborhood pooling toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph file")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    er = gen_sub.add_parser("er", help="uniform random graph")
    er.add_argument("--n", type=int, required=True)
    er.add_argument("--p", type=float, required=True)
    er.add_argument("--seed", type=int, required=True)
    er.add_argument("--out")
    reg = gen_sub.add_parser("regular", help="perturbed random regular graph")
    reg.add_argument("--n", type=int, required=True)
    reg.add_argument("--d", type=int, default=3)
    reg.add_argument("--delete", type=int, default=0)
    reg.add_argument("--seed", type=int, required=True)
    reg.add_argument("--out")
    pp = gen_sub.add_parser("prime-partite", help="prime-sized complete multipartite graph")
    pp.add_argument("--primes", required=True, help="comma-separated distinct primes")
    pp.add_argument("--n", type=int, required=True)
    pp.add_argument("--out")
    pat = gen_sub.add_parser("pattern", help="named pattern graph")
    pat.add_argument("--name", required=True,
                     choices=["cycle", "complete", "path", "star", "figure2_pair"])
    pat.add_argument("--size", type=int)
    pat.add_argument("--out")

    cover = sub.add_parser("cover", help="minimum-first-radius covering sequence")
    cover.add_argument("graph")

    count = sub.add_parser("count", help="exact subgraph count")
    count.add_argument("graph")
    count.add_argument("pattern")
    count.add_argument("--mode", choices=["induced", "noninduced"], default="induced")

    encode = sub.add_parser("encode", help="whole-graph encoding digest and work counter")
    encode.add_argument("graph")
    encode.add_argument("--radii", required=True, help="comma-separated radii, e.g. 2,1")

    dis = sub.add_parser("distinguish", help="compare two graphs under pooling and 1-WL")
    dis.add_argument("graph1")
    dis.add_argument("graph2")
    dis.add_argument("--radii", required=True)

    comp = sub.add_parser("complexity", help="node updates against the worst-case bound")
    comp.add_argument("graph")
    comp.add_argument("--radii", required=True)

    exp = sub.add_parser("experiment", help="run a batch experiment spec, emit CSV")
    exp.add_argument("spec")
    return parser


_DISPATCH = {
    "gen": _cmd_gen,
    "cover": _cmd_cover,
    "count": _cmd_count,
    "encode": _cmd_encode,
    "distinguish": _cmd_distinguish,
    "complexity": _cmd_complexity,
    "experiment": _cmd_experiment,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return _DISPATCH[args.command](args, out)
    except (UserError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
