"""Command-line surface: decompose, witness, stream, gen, verify.

Exit codes form a trichotomy shared by every subcommand: 0 when the answer
is a partition (or "balanced"/"ok"), 1 when it is a certificate or a
violation, 2 for malformed input.  All output is newline-terminated UTF-8
with sorted vertex lists, byte-stable across runs for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .balance import (
    RAW,
    ImbalanceCertificate,
    degree_imbalance,
    is_balanced,
    refine_overloaded,
    saturate_overloaded,
)
from .decompose import CyclePartition, Dicycle, decompose
from .digraph import Digraph
from .edgelist import EdgeListParseError, format_edge_list, load_digraph, parse_line
from .generate import GenSpec, perturb, random_cycle_union
from .stream import POLICIES, StreamEngine
from .verify import check_certificate, check_partition, theorem_crosscheck


def _cycle_line(index: int, cycle: Dicycle) -> str:
    return f"cycle {index}: " + " ".join(str(e) for e in cycle.edge_ids)


def format_partition_text(p: CyclePartition) -> str:
    return "".join(_cycle_line(i, c) + "\n" for i, c in enumerate(p.cycles))


def format_certificate_text(c: ImbalanceCertificate) -> str:
    lines = [
        f"form: {c.form}",
        "x: " + " ".join(str(v) for v in sorted(c.x)),
        f"out_count: {c.out_count}",
        f"in_count: {c.in_count}",
    ]
    if c.form == "refined":
        lines.append("z: " + " ".join(str(v) for v in sorted(c.component)))
        lines.append("y: " + " ".join(str(v) for v in sorted(c.complement_y)))
    return "".join(line + "\n" for line in lines)


def _certificate_obj(c: ImbalanceCertificate) -> dict:
    return {
        "form": c.form,
        "x": sorted(c.x),
        "out_count": c.out_count,
        "in_count": c.in_count,
        "z": sorted(c.component) if c.component is not None else None,
        "y": sorted(c.complement_y) if c.complement_y is not None else None,
    }


def _json_dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def format_partition_json(p: CyclePartition) -> str:
    return _json_dump(
        {
            "status": "partition",
            "cycles": [list(c.edge_ids) for c in p.cycles],
            "certificate": None,
        }
    )


def format_certificate_json(c: ImbalanceCertificate) -> str:
    return _json_dump(
        {"status": "certificate", "cycles": None, "certificate": _certificate_obj(c)}
    )


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Digraph:
    return load_digraph(_read_text(path))


# -- subcommands -----------------------------------------------------------


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    result = decompose(g)
    if isinstance(result, CyclePartition):
        if args.format == "json":
            sys.stdout.write(format_partition_json(result))
        else:
            sys.stdout.write(format_partition_text(result))
        return 0
    if args.format == "json":
        sys.stdout.write(format_certificate_json(result))
    else:
        sys.stdout.write(format_certificate_text(result))
    return 1


def cmd_witness(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    imbalance = degree_imbalance(g)
    if not imbalance:
        print("balanced")
        return 0
    v = min(u for u, d in imbalance.items() if d > 0)
    x: frozenset[int] = frozenset((v,))
    cut = g.cut(x)
    cert = ImbalanceCertificate(RAW, x, len(cut.out_edges), len(cut.in_edges))
    if args.refine:
        cert = refine_overloaded(g, cert.x)
    if args.saturate:
        cert = saturate_overloaded(g, cert.x)
    sys.stdout.write(format_certificate_text(cert))
    return 1


def cmd_stream(args: argparse.Namespace) -> int:
    engine = StreamEngine(policy=args.policy)
    emitted = 0
    for lineno, line in enumerate(sys.stdin, 1):
        item = parse_line(lineno, line)
        if item is None or item[0] == "vertices":
            continue
        for cycle in engine.push(item[1], item[2]):
            print(_cycle_line(emitted, cycle), flush=True)
            emitted += 1
    print("---")
    result = engine.drain()
    if isinstance(result, CyclePartition):
        sys.stdout.write(format_partition_text(result))
        code = 0
    else:
        sys.stdout.write(format_certificate_text(result))
        code = 1
    if args.stats:
        s = engine.stats()
        print(
            f"stats: peak_buffer_edges={s.peak_buffer_edges} "
            f"current_buffer_edges={s.current_buffer_edges} "
            f"cycles_emitted={s.cycles_emitted}"
        )
    return code


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(
        seed=args.seed,
        n_vertices=args.vertices,
        n_cycles=args.cycles,
        cycle_len_range=(args.len_min, args.len_max),
    )
    g = random_cycle_union(spec)
    comments = [f"seed={args.seed}"]
    if args.drop is not None or args.add is not None:
        g = perturb(
            g,
            GenSpec(
                seed=args.seed,
                n_vertices=args.vertices,
                n_cycles=args.cycles,
                cycle_len_range=(args.len_min, args.len_max),
                add_edges=args.add,
                drop_edges=args.drop,
            ),
        )
        kind = "add" if args.add is not None else "drop"
        comments.append(f"perturbed={kind}:{args.add if args.add is not None else args.drop}")
        comments.append(f"balanced={'true' if is_balanced(g) else 'false'}")
    sys.stdout.write(format_edge_list(g, comments))
    return 0


def _parse_partition_file(text: str) -> CyclePartition:
    stripped = text.lstrip()
    cycles: list[Dicycle] = []
    if stripped.startswith("{"):
        obj = json.loads(text)
        for ids in obj.get("cycles") or []:
            cycles.append(Dicycle(tuple(int(e) for e in ids)))
    else:
        indexed: list[tuple[int, Dicycle]] = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if not line.startswith("cycle "):
                raise EdgeListParseError(lineno, "expected 'cycle <index>: <edge ids>'")
            try:
                label, ids = line.split(":", 1)
                index = int(label.split()[1])
                edge_ids = tuple(int(tok) for tok in ids.split())
            except (ValueError, IndexError):
                raise EdgeListParseError(
                    lineno, "expected 'cycle <index>: <edge ids>'"
                ) from None
            indexed.append((index, Dicycle(edge_ids)))
        indexed.sort(key=lambda pair: pair[0])
        cycles = [c for _, c in indexed]
    assignment = {
        eid: index for index, c in enumerate(cycles) for eid in c.edge_ids
    }
    return CyclePartition(cycles, assignment)


def _parse_certificate_file(text: str) -> ImbalanceCertificate:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(text)
        obj = obj.get("certificate") or obj
        return ImbalanceCertificate(
            form=obj["form"],
            x=frozenset(obj["x"]),
            out_count=obj["out_count"],
            in_count=obj["in_count"],
            component=frozenset(obj["z"]) if obj.get("z") is not None else None,
            complement_y=frozenset(obj["y"]) if obj.get("y") is not None else None,
        )
    fields: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise EdgeListParseError(lineno, "expected 'key: value'")
        key, value = line.split(":", 1)
        fields[key.strip()] = value.strip()
    try:
        return ImbalanceCertificate(
            form=fields["form"],
            x=frozenset(int(t) for t in fields["x"].split()),
            out_count=int(fields["out_count"]),
            in_count=int(fields["in_count"]),
            component=frozenset(int(t) for t in fields["z"].split()) if "z" in fields else None,
            complement_y=frozenset(int(t) for t in fields["y"].split()) if "y" in fields else None,
        )
    except (KeyError, ValueError) as exc:
        raise EdgeListParseError(1, f"bad certificate file: {exc}") from None


def cmd_verify(args: argparse.Namespace) -> int:
    if args.crosscheck is not None:
        max_vertices, max_edges = args.crosscheck
        report = theorem_crosscheck(max_vertices, max_edges)
        print(f"crosscheck: {report.summary()}")
        for problem in report.discrepancies:
            print(problem)
        return 0 if not report.discrepancies else 1
    if args.input is None:
        print("an input graph is required", file=sys.stderr)
        return 2
    g = _load_graph(args.input)
    if args.partition is not None:
        violation = check_partition(g, _parse_partition_file(_read_text(args.partition)))
    else:
        violation = check_certificate(
            g, _parse_certificate_file(_read_text(args.certificate))
        )
    if violation is None:
        print("ok")
        return 0
    print(violation)
    return 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicycles",
        description=(
            "Partition a directed multigraph's edges into directed cycles, "
            "or certify the imbalance that makes it impossible."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="partition an edge-list file into dicycles")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("witness", help="print an imbalance certificate, or 'balanced'")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--refine", action="store_true", help="connected two-sided form")
    p.add_argument("--saturate", action="store_true", help="reachability-closed form")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("stream", help="read edges from stdin, emit cycles as they close")
    p.add_argument("--policy", choices=POLICIES, default="eager-oldest")
    p.add_argument("--stats", action="store_true", help="print buffer statistics")
    p.set_defaults(func=cmd_stream)

    p = sub.add_parser("gen", help="emit a seeded random cycle-union edge list")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--cycles", type=int, required=True)
    p.add_argument("--len-min", type=int, default=1)
    p.add_argument("--len-max", type=int, default=3)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--drop", type=int, default=None, help="drop N random edges")
    group.add_argument("--add", type=int, default=None, help="add N random edges")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a partition or certificate, or crosscheck")
    p.add_argument("input", nargs="?", default=None, help="edge-list file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--partition", metavar="FILE")
    group.add_argument("--certificate", metavar="FILE")
    group.add_argument(
        "--crosscheck",
        nargs=2,
        type=int,
        metavar=("V", "E"),
        help="enumerate all labeled digraphs with V vertices and up to E edges",
    )
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EdgeListParseError as exc:
        print(f"line {exc.lineno}: {exc.reason}", file=sys.stderr)
        return 2
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
