"""Benchmark harness: dataset generators, scenario runner, CSV reporting.

Datasets are raw little-endian unsigned 64-bit files with no header, so user
supplied data drops in without conversion.  A run constructs the chosen index
insertion-only from a dataset, then executes a scenario batch, emitting one
CSV row per sampling window and op class plus a summary row per class.  The
operation stream is derived only from the seed and the dataset, never from
index behaviour, so runs over different indexes are directly comparable and
every column except the wall-clock ones is reproducible bit for bit.
"""

from __future__ import annotations

import argparse
import csv
import math
import random
import sys
import time
from dataclasses import dataclass

import numpy as np

from .baseline import LogPGM
from .chains import COUNTERS
from .cover import DeleteResult, InsertResult
from .index import DynamicIndex
from .oracles import SortedOracle

CSV_FIELDS = ["window_start_op", "op_class", "count", "total_ns", "mean_ns",
              "elements_touched", "segment_count", "alloc_nodes"]

VALUE_LIMIT = 1 << 62


@dataclass
class Workload:
    scenario: str = "dynamic"      # dynamic | adversarial
    batch_size: int = 10_000
    query_ratio: float = 0.5       # fraction of the batch that is range queries
    seed: int = 1
    eps: int = 64
    survivors: int = 1000          # adversarial: live values kept
    adv_target_output: int = 200   # adversarial: expected live values per range
    window: int = 0                # ops per CSV window; 0 = batch/20

    def validate(self):
        if self.scenario not in ("dynamic", "adversarial"):
            raise ValueError(f"unknown scenario {self.scenario!r}")
        if not 0 <= self.query_ratio <= 1:
            raise ValueError("query ratio must be within [0, 1]")
        if self.batch_size < 0 or self.eps < 1:
            raise ValueError("batch size must be >= 0 and eps >= 1")


# ---------------------------------------------------------------------------
# dataset generation and IO
# ---------------------------------------------------------------------------

def generate_lines(n, m, seed):
    """m blocks of n/m values; block j is an arithmetic run with stride 2^j.

    Blocks are separated by gaps of 2^(m+2) * (n/m), large enough that no
    single segment can cover two blocks at desk-scale eps, so an optimal
    cover has exactly m segments.  Output is shuffled by seed.
    """
    if m < 1 or n % m:
        raise ValueError("need m >= 1 and n divisible by m")
    per = n // m
    gap = (1 << (m + 2)) * per
    top = (m - 1) * gap + per * sum(1 << j for j in range(m))
    if top >= VALUE_LIMIT:
        raise ValueError("largest value would overflow the supported range")
    out = np.empty(n, dtype=np.int64)
    base = 0
    for j in range(m):
        stride = 1 << j
        block = base + stride * np.arange(per, dtype=np.int64)
        out[j * per:(j + 1) * per] = block
        base = int(block[-1]) + gap
    rng = np.random.default_rng(seed)
    rng.shuffle(out)
    return out


def generate_unif(n, seed):
    """n distinct uniform draws from (0, 10^11), shuffled, seed-deterministic."""
    if n >= 10 ** 11:
        raise ValueError("n must be below the universe size")
    rng = np.random.default_rng(seed)
    vals = rng.integers(1, 10 ** 11, size=n, dtype=np.int64)
    seen = np.unique(vals)
    while len(seen) < n:
        extra = rng.integers(1, 10 ** 11, size=n - len(seen), dtype=np.int64)
        seen = np.unique(np.concatenate([seen, extra]))
    vals = seen[:n].copy()
    rng.shuffle(vals)
    return vals


def write_dataset(path, values):
    np.asarray(values, dtype="<u8").tofile(path)


def read_dataset(path):
    vals = np.fromfile(path, dtype="<u8").astype(np.int64)
    if len(vals) and int(vals.max()) >= VALUE_LIMIT:
        raise ValueError("dataset contains values outside the supported range")
    return vals


# ---------------------------------------------------------------------------
# index adapters: one interface over the three structures
# ---------------------------------------------------------------------------

class _DynamicAdapter:
    name = "dynamic"

    def __init__(self, eps):
        self.ix = DynamicIndex(eps)

    def insert(self, v):
        return self.ix.insert(v) == InsertResult.INSERTED

    def delete(self, v):
        return self.ix.delete(v) == DeleteResult.DELETED

    def range(self, u, v):
        return self.ix.range(u, v)

    def segment_count(self):
        return self.ix.cover.segment_count()

    def touched(self):
        return self.ix.store.touched

    def allocs(self):
        return COUNTERS.allocs


class _LogPGMAdapter:
    name = "logpgm"

    def __init__(self, eps):
        self.lp = LogPGM(eps)

    def insert(self, v):
        try:
            self.lp.insert(v)
            return True
        except ValueError:
            return False

    def delete(self, v):
        try:
            self.lp.delete(v)
            return True
        except ValueError:
            return False

    def range(self, u, v):
        return self.lp.range(u, v)

    def segment_count(self):
        total = 0
        for b in self.lp.buckets:
            if b is not None:
                total += len(b.cover or []) + len(b.tomb_cover or [])
        return total

    def touched(self):
        return self.lp.touched[0]

    def allocs(self):
        return self.lp.merged_elements

    def live(self):
        return self.lp.live_values()


class _OracleAdapter:
    name = "oracle"

    def __init__(self, eps):
        self.s = SortedOracle()
        self._touched = 0

    def insert(self, v):
        return self.s.insert(v)

    def delete(self, v):
        return self.s.delete(v)

    def range(self, u, v):
        out = self.s.range(u, v)
        self._touched += len(out) + 2
        return out

    def segment_count(self):
        return 0

    def touched(self):
        return self._touched

    def allocs(self):
        return 0


ADAPTERS = {"dynamic": _DynamicAdapter, "logpgm": _LogPGMAdapter,
            "oracle": _OracleAdapter}


# ---------------------------------------------------------------------------
# scenario runner
# ---------------------------------------------------------------------------

class _Live:
    """Mirror of the live set for drawing workload operands in O(1)."""

    def __init__(self):
        self.items = []
        self.pos = {}

    def add(self, v):
        if v not in self.pos:
            self.pos[v] = len(self.items)
            self.items.append(v)

    def remove(self, v):
        i = self.pos.pop(v, None)
        if i is None:
            return
        last = self.items.pop()
        if i < len(self.items):
            self.items[i] = last
            self.pos[last] = i

    def __contains__(self, v):
        return v in self.pos

    def __len__(self):
        return len(self.items)

    def pick(self, rng):
        return self.items[rng.randrange(len(self.items))]


class _Recorder:
    """Accumulates per-window, per-class counters and emits CSV rows."""

    def __init__(self, adapter, window):
        self.adapter = adapter
        self.window = window
        self.rows = []
        self.op_no = 0
        self._start = 0
        self._acc = {}

    def note(self, op_class, ns, touched):
        cell = self._acc.setdefault(op_class, [0, 0, 0])
        cell[0] += 1
        cell[1] += ns
        cell[2] += touched
        self.op_no += 1
        if self.op_no - self._start >= self.window:
            self.flush()

    def flush(self):
        if not self._acc:
            return
        seg = self.adapter.segment_count()
        alloc = self.adapter.allocs()
        for op_class in sorted(self._acc):
            count, ns, touched = self._acc[op_class]
            self.rows.append({
                "window_start_op": self._start,
                "op_class": op_class,
                "count": count,
                "total_ns": ns,
                "mean_ns": ns // count,
                "elements_touched": touched,
                "segment_count": seg,
                "alloc_nodes": alloc,
            })
        self._acc = {}
        self._start = self.op_no


def run_scenario(index_kind, values, workload, self_check=False, out_path=None):
    """Construct the index from values, run the scenario, return CSV rows."""
    workload.validate()
    if index_kind not in ADAPTERS:
        raise ValueError(f"unknown index {index_kind!r}")
    COUNTERS.reset()
    adapter = ADAPTERS[index_kind](workload.eps)
    rng = random.Random(workload.seed)
    oracle = SortedOracle() if self_check else None
    live = _Live()
    values = [int(v) for v in values]
    if not values:
        raise ValueError("empty dataset")
    span_lo, span_hi = min(values), max(values)
    window = workload.window or max(1, (len(values) + workload.batch_size) // 20)
    rec = _Recorder(adapter, window)

    def timed(op_class, fn, *args):
        before = adapter.touched()
        t0 = time.perf_counter_ns()
        out = fn(*args)
        ns = time.perf_counter_ns() - t0
        rec.note(op_class, ns, adapter.touched() - before)
        return out

    def do_insert(v):
        ok = timed("insert", adapter.insert, v)
        if ok:
            live.add(v)
        if oracle is not None:
            assert oracle.insert(v) == ok, "insert status diverged from oracle"

    def do_delete(v):
        ok = timed("delete", adapter.delete, v)
        if ok:
            live.remove(v)
        if oracle is not None:
            assert oracle.delete(v) == ok, "delete status diverged from oracle"

    def do_range(u, v):
        out = timed("range", adapter.range, u, v)
        if oracle is not None:
            assert out == oracle.range(u, v), "range answer diverged from oracle"

    def draw_range():
        u = live.pick(rng)
        n_live = len(live)
        if workload.scenario == "adversarial":
            target = workload.adv_target_output
        else:
            target = max(1, math.isqrt(n_live) // 10)
        width = max(1, (span_hi - span_lo) * target // max(1, n_live))
        return u, u + width

    # construction: insertion-only
    for v in values:
        do_insert(v)

    if workload.scenario == "adversarial":
        keep = set(rng.sample(values, min(workload.survivors, len(values))))
        for v in values:
            if v not in keep:
                do_delete(v)
        for _ in range(workload.batch_size):
            u, v = draw_range()
            do_range(u, v)
    else:
        n_ranges = round(workload.batch_size * workload.query_ratio)
        rest = workload.batch_size - n_ranges
        ops = ["range"] * n_ranges + ["insert"] * (rest - rest // 2) + \
              ["delete"] * (rest // 2)
        rng.shuffle(ops)
        for op in ops:
            if op == "range" and len(live):
                u, v = draw_range()
                do_range(u, v)
            elif op == "insert":
                do_insert(rng.randint(span_lo, span_hi))
            elif len(live):
                do_delete(live.pick(rng))
    rec.flush()

    meta = {
        "index": index_kind,
        "scenario": workload.scenario,
        "n": len(values),
        "batch": workload.batch_size,
        "query_ratio": workload.query_ratio,
        "eps": workload.eps,
        "seed": workload.seed,
    }
    if out_path is not None:
        write_csv(out_path, meta, rec.rows)
    return meta, rec.rows


def write_csv(path, meta, rows):
    with open(path, "w", newline="") as fh:
        fh.write("# " + " ".join(f"{k}={v}" for k, v in meta.items()) + "\n")
        w = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        w.writeheader()
        for row in rows:
            w.writerow(row)


def read_csv(path):
    meta = {}
    rows = []
    with open(path) as fh:
        first = fh.readline()
        if first.startswith("#"):
            for part in first[1:].split():
                k, _, v = part.partition("=")
                meta[k] = v
        else:
            fh.seek(0)
        for row in csv.DictReader(fh):
            rows.append({k: int(v) if k != "op_class" else v
                         for k, v in row.items()})
    return meta, rows


def report(paths):
    """Aligned text summary, one row per run, sorted by (index, dataset)."""
    runs = []
    for p in paths:
        meta, rows = read_csv(p)
        classes = {}
        max_seg = 0
        alloc = 0
        for r in rows:
            c = classes.setdefault(r["op_class"], [0, 0, 0])
            c[0] += r["count"]
            c[1] += r["total_ns"]
            c[2] += r["elements_touched"]
            max_seg = max(max_seg, r["segment_count"])
            alloc = max(alloc, r["alloc_nodes"])
        runs.append((meta.get("index", "?"), meta.get("scenario", "?"),
                     meta.get("n", "?"), classes, max_seg, alloc))
    runs.sort(key=lambda r: (r[0], r[1], str(r[2])))
    header = (f"{'index':<8} {'scenario':<12} {'n':>9} {'ops':>9} "
              f"{'ins ns':>10} {'del ns':>10} {'rng ns':>10} "
              f"{'rng touch':>10} {'max segs':>9} {'allocs':>10}")
    lines = [header, "-" * len(header)]
    for index, scenario, n, classes, max_seg, alloc in runs:
        total_ops = sum(c[0] for c in classes.values())

        def mean(cls, what):
            c = classes.get(cls)
            if not c or not c[0]:
                return "-"
            return str(c[what] // c[0])

        lines.append(f"{index:<8} {scenario:<12} {n:>9} {total_ops:>9} "
                     f"{mean('insert', 1):>10} {mean('delete', 1):>10} "
                     f"{mean('range', 1):>10} {mean('range', 2):>10} "
                     f"{max_seg:>9} {alloc:>10}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------

def main(argv=None):
    ap = argparse.ArgumentParser(prog="dynpgm",
                                 description="dynamic learned-index benchmarks")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen-lines", help="synthetic blocks of arithmetic runs")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, default=20)
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--out", required=True)

    u = sub.add_parser("gen-unif", help="uniform random integers below 1e11")
    u.add_argument("--n", type=int, required=True)
    u.add_argument("--seed", type=int, default=1)
    u.add_argument("--out", required=True)

    r = sub.add_parser("run", help="run one scenario over one index")
    r.add_argument("--index", choices=sorted(ADAPTERS), required=True)
    r.add_argument("--data", required=True)
    r.add_argument("--eps", type=int, default=64)
    r.add_argument("--scenario", choices=["dynamic", "adversarial"],
                   default="dynamic")
    r.add_argument("--batch", type=int, default=10_000)
    r.add_argument("--query-ratio", type=float, default=0.5)
    r.add_argument("--seed", type=int, default=1)
    r.add_argument("--survivors", type=int, default=1000)
    r.add_argument("--adv-target-output", type=int, default=200)
    r.add_argument("--window", type=int, default=0)
    r.add_argument("--out", required=True)
    r.add_argument("--self-check", action="store_true",
                   help="run the sorted oracle in lockstep and compare")

    p = sub.add_parser("report", help="summarise one or more run CSVs")
    p.add_argument("files", nargs="+")

    args = ap.parse_args(argv)
    try:
        if args.cmd == "gen-lines":
            write_dataset(args.out, generate_lines(args.n, args.m, args.seed))
        elif args.cmd == "gen-unif":
            write_dataset(args.out, generate_unif(args.n, args.seed))
        elif args.cmd == "run":
            wl = Workload(scenario=args.scenario, batch_size=args.batch,
                          query_ratio=args.query_ratio, seed=args.seed,
                          eps=args.eps, survivors=args.survivors,
                          adv_target_output=args.adv_target_output,
                          window=args.window)
            run_scenario(args.index, read_dataset(args.data), wl,
                         self_check=args.self_check, out_path=args.out)
        else:
            print(report(args.files))
    except (ValueError, OSError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
