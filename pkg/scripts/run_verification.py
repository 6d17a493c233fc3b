#!/usr/bin/env python3
"""Run the full verification campaign and write JSON reports.

Sections, in order: the embedded selftest, exhaustive equality scans for
every characterized pattern set of all three targets, witness mining for
the strict extensions just beyond the edge-connectivity boundary, the
sufficient-condition soundness sweep, the minimum-cut interior sweep, and
the intersection of the two single-equality characterizations.

Each section lands in its own JSON file under --out-dir, and one summary
line per record goes to stdout.  Exit code 0 means every scan held and
every expected witness was found; 2 flags any violation; 1 is usage/IO.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from edgeconn import (
    CHARACTERIZED_PAIRS,
    TARGETS,
    characterized_sets,
    cut_interior_property,
    edge_connectivity,
    ensure_level,
    intersect_characterizations,
    maximality_sweep,
    min_degree,
    mine_witness,
    parse_pattern_set,
    pattern_equivalent,
    recognize_pattern,
    run_selftest,
    to_graph6,
    verify_pattern_set,
)
from edgeconn.conditions import condition_implication_rows

# strict extensions of the characterized sets, checked through the sweep
EXTENSION_PAIRS = ("H1,P6", "Z3,P6", "Z2,P7", "Z2,T1_1_4")
# pairs incomparable with every characterized set; a witness rules out any
# alternative characterization built around them
INCOMPARABLE_PAIRS = ("K1_4,P5", "K1_3,P5")


def parse_args(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=9,
                    help="scan depth for the equality claims (default 9)")
    ap.add_argument("--sweep-n-max", type=int, default=8,
                    help="depth for the condition and cut-interior sweeps (default 8)")
    ap.add_argument("--out-dir", default="reports", help="report directory")
    ap.add_argument("--workers", type=int,
                    default=max(1, int(os.environ.get("EDGECONN_WORKERS", "1") or 1)))
    return ap.parse_args(argv)


def write_json(path: Path, payload):
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    print(f"  wrote {path}")


def section_selftest(out_dir: Path) -> bool:
    cases = run_selftest()
    payload = [
        {"case_id": cid, "passed": passed, "detail": detail}
        for cid, passed, detail in cases
    ]
    write_json(out_dir / "selftest.json", payload)
    for row in payload:
        print(f"  {'PASS' if row['passed'] else 'FAIL'} {row['case_id']}")
    return all(row["passed"] for row in payload)


def section_scans(out_dir: Path, n_max: int, workers: int) -> bool:
    records = []
    held = True
    for target in TARGETS:
        for ps in characterized_sets(target):
            rec = verify_pattern_set(ps, n_max, target, workers=workers)
            records.append(rec.as_dict())
            held &= rec.held
            mark = "held" if rec.held else f"{len(rec.counterexamples)} counterexamples"
            print(f"  {rec.claim_id}: {mark} "
                  f"({rec.graphs_scanned} free graphs, {rec.elapsed_ms:.0f} ms)")
    write_json(out_dir / "equality_scans.json", records)
    return held


def section_witnesses(out_dir: Path, n_max: int, workers: int) -> bool:
    base = characterized_sets("kappa_prime_delta")
    extensions = [parse_pattern_set(text) for text in EXTENSION_PAIRS]
    rows = []
    complete = True

    def record(pair, rec, relation):
        nonlocal complete
        if rec is None:
            rows.append({"pair": pair.label, "witness": None, "relation": relation})
            complete = False
            print(f"  {pair.label}: no witness up to n={n_max}")
        else:
            rows.append({**rec.as_dict(), "relation": relation})
            print(f"  {pair.label}: witness {rec.witness} "
                  f"(kappa'={rec.kappa_prime} < delta={rec.delta}, {rec.origin})")

    for ext, rec in maximality_sweep(base, extensions, n_max, workers=workers):
        record(ext, rec, "strict-extension")
    for text in INCOMPARABLE_PAIRS:
        pair = parse_pattern_set(text)
        record(pair, mine_witness(pair, n_max, workers=workers), "incomparable")
    write_json(out_dir / "extension_witnesses.json", rows)
    return complete


def section_conditions(out_dir: Path, n_max: int, workers: int) -> bool:
    t0 = time.perf_counter()
    scanned = 0
    fired = 0
    violations = []
    for n in range(2, n_max + 1):
        for g in ensure_level(n, workers=workers):
            scanned += 1
            for row in condition_implication_rows(g):
                fired += row.holds
                if not row.sound:
                    violations.append(
                        {"graph6": to_graph6(g), "condition": row.condition.name}
                    )
    payload = {
        "claim_id": f"conditions:soundness:n<={n_max}",
        "n_max": n_max,
        "graphs_scanned": scanned,
        "hypotheses_fired": fired,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
        "counterexamples": violations,
    }
    write_json(out_dir / "condition_soundness.json", payload)
    print(f"  {payload['claim_id']}: {len(violations)} violations, "
          f"{fired} hypothesis hits over {scanned} graphs")
    return not violations


def section_cut_interiors(out_dir: Path, n_max: int, workers: int) -> bool:
    t0 = time.perf_counter()
    scanned = 0
    gap = []
    failures = []
    for n in range(2, n_max + 1):
        for g in ensure_level(n, workers=workers):
            scanned += 1
            if edge_connectivity(g) < min_degree(g):
                gap.append(to_graph6(g))
                if not cut_interior_property(g):
                    failures.append(to_graph6(g))
    payload = {
        "claim_id": f"cut_interior:n<={n_max}",
        "n_max": n_max,
        "graphs_scanned": scanned,
        "gap_graphs": len(gap),
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
        "counterexamples": failures,
    }
    write_json(out_dir / "cut_interior.json", payload)
    print(f"  {payload['claim_id']}: {len(gap)} gap graphs, "
          f"{len(failures)} without two-sided interiors")
    return not failures


def section_intersection(out_dir: Path) -> bool:
    meet = intersect_characterizations(
        characterized_sets("kappa_kappa_prime"),
        characterized_sets("kappa_prime_delta"),
        6,
    )
    rows = [
        {
            "label": ps.label,
            "members": [recognize_pattern(p.graph) for p in ps.patterns],
        }
        for ps in meet
    ]
    write_json(out_dir / "characterization_intersection.json", rows)
    for row in rows:
        print(f"  meet element: {row['label']}")
    want = [parse_pattern_set(t) for t in CHARACTERIZED_PAIRS["kappa_delta"]]
    return len(meet) == len(want) and all(
        any(pattern_equivalent(w, got) for got in meet) for w in want
    )


def main(argv=None) -> int:
    args = parse_args(argv)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()

    sections = []
    print("[1/6] selftest")
    sections.append(("selftest", section_selftest(out_dir)))
    if not sections[-1][1]:
        print("selftest failed; aborting the campaign", file=sys.stderr)
        return 2

    print(f"[2/6] equality scans, n <= {args.n_max}")
    sections.append(
        ("equality_scans", section_scans(out_dir, args.n_max, args.workers))
    )
    print(f"[3/6] extension witnesses, n <= {args.n_max}")
    sections.append(
        ("extension_witnesses", section_witnesses(out_dir, args.n_max, args.workers))
    )
    print(f"[4/6] sufficient-condition soundness, n <= {args.sweep_n_max}")
    sections.append(
        ("condition_soundness",
         section_conditions(out_dir, args.sweep_n_max, args.workers))
    )
    print(f"[5/6] minimum-cut interiors, n <= {args.sweep_n_max}")
    sections.append(
        ("cut_interior",
         section_cut_interiors(out_dir, args.sweep_n_max, args.workers))
    )
    print("[6/6] characterization intersection")
    sections.append(("intersection", section_intersection(out_dir)))

    elapsed = time.perf_counter() - t0
    all_ok = all(ok for _, ok in sections)
    summary = {name: ("ok" if ok else "VIOLATION") for name, ok in sections}
    write_json(out_dir / "summary.json", {"elapsed_s": round(elapsed, 1), **summary})
    print(f"campaign finished in {elapsed:.0f}s: "
          + ", ".join(f"{k}={v}" for k, v in summary.items()))
    return 0 if all_ok else 2


if __name__ == "__main__":
    try:
        sys.exit(main())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(1)
