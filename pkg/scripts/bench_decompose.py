#!/usr/bin/env python3
"""Time the decomposer and the streaming engine on a large cycle union.

Generates a seeded balanced multigraph (a union of random simple cycles),
times decompose() on it, optionally replays the same edges in shuffled
order through a StreamEngine, and prints one JSON record with timings,
peak stream buffer, and the process's peak RSS.

Run from the repository root:

    python scripts/bench_decompose.py --vertices 2000000 --cycles 200000
"""

from __future__ import annotations

import argparse
import json
import resource
import sys
import time

from dicycles import (
    CyclePartition,
    GenSpec,
    StreamEngine,
    check_partition,
    decompose,
    random_cycle_union,
    shuffle_stream,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--vertices", type=int, default=3_000_000)
    parser.add_argument("--cycles", type=int, default=200_000)
    parser.add_argument("--len-min", type=int, default=5)
    parser.add_argument("--len-max", type=int, default=5)
    parser.add_argument("--seed", type=int, default=20260808)
    parser.add_argument("--policy", default="eager-oldest")
    parser.add_argument("--skip-decompose", action="store_true")
    parser.add_argument("--skip-stream", action="store_true")
    parser.add_argument("--skip-check", action="store_true")
    args = parser.parse_args()

    spec = GenSpec(
        seed=args.seed,
        n_vertices=args.vertices,
        n_cycles=args.cycles,
        cycle_len_range=(args.len_min, args.len_max),
    )
    t0 = time.perf_counter()
    g = random_cycle_union(spec)
    build_s = time.perf_counter() - t0
    record: dict = {
        "edges": g.edge_count,
        "vertices": args.vertices,
        "cycles_requested": args.cycles,
        "build_s": round(build_s, 3),
    }

    if not args.skip_decompose:
        t0 = time.perf_counter()
        partition = decompose(g)
        record["decompose_s"] = round(time.perf_counter() - t0, 3)
        assert isinstance(partition, CyclePartition)
        record["cycles_found"] = len(partition.cycles)

        if not args.skip_check:
            t0 = time.perf_counter()
            violation = check_partition(g, partition)
            record["check_s"] = round(time.perf_counter() - t0, 3)
            record["partition_ok"] = violation is None
            if violation is not None:
                record["violation"] = violation

    if not args.skip_stream:
        order = shuffle_stream(g, args.seed + 1)
        engine = StreamEngine(policy=args.policy)
        t0 = time.perf_counter()
        for tail, head in order:
            engine.push(tail, head)
        drained = engine.drain()
        record["stream_s"] = round(time.perf_counter() - t0, 3)
        stats = engine.stats()
        record["stream_policy"] = args.policy
        record["stream_peak_buffer_edges"] = stats.peak_buffer_edges
        record["stream_cycles_emitted"] = stats.cycles_emitted
        record["stream_drained_partition"] = isinstance(drained, CyclePartition)

    record["max_rss_kb"] = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    json.dump(record, sys.stdout, sort_keys=True)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
