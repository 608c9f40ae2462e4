"""Command-line interface: group-file ingestion, per-command reports, and
corpus verification with deterministic machine-readable output.

All reports are JSON; `--format table` is a rendering of the same data.
Identical inputs produce byte-identical reports.  The environment variable
BLOCKFUSE_SEED (default 0) seeds the equal-degree splitting inside the
polynomial factorization; results are canonical for every seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .algebra import (augmentation, is_k_rational, primitive_central_idempotents,
                      principal_block)
from .brauer import maximal_pairs
from .descent import block_correspondence, galois_orbit, run_descent
from .fusion import (assert_fusion_axioms, block_fusion, fully_normalized, fusion_equal,
                     group_fusion, is_centric, is_saturated, saturation_report)
from .gf import make_tower
from .groups import build_group
from . import __version__


def _builtin_path(name: str) -> Path:
    return Path(str(resources.files("blockfuse").joinpath("data", "groups", f"{name}.json")))


def default_corpus_path() -> Path:
    return Path(str(resources.files("blockfuse").joinpath("data", "corpus.json")))


def load_group_file(path: str, base: Path | None = None):
    if path.startswith("builtin:"):
        file = _builtin_path(path.split(":", 1)[1])
    else:
        file = Path(path)
        if base is not None and not file.is_absolute():
            file = base / file
    with open(file, "r", encoding="utf-8") as fh:
        return build_group(json.load(fh))


def _tower_dict(tower) -> dict:
    return {"p": tower.p, "m": tower.m, "n": tower.n, "modulus": list(tower.modulus)}


def _block_entry(G, tower, block, seed) -> dict:
    return {
        "index": block.index,
        "support": block.elem.to_sparse(),
        "k_rational": is_k_rational(block.elem),
        "defect_order": maximal_pairs(G, tower, block, seed).defect_order,
        "principal": augmentation(block.elem) == 1,
    }


def blocks_report(G, tower, seed: int = 0) -> dict:
    l_blocks = primitive_central_idempotents(G, tower, over_k=False, seed=seed)
    report = {
        "group": G.name,
        "order": G.order,
        "tower": _tower_dict(tower),
        "blocks": [_block_entry(G, tower, b, seed) for b in l_blocks],
    }
    corr = block_correspondence(G, tower, seed)
    report["orbits"] = [list(o) for o in corr.orbits]
    if tower.gamma_order > 1:
        k_blocks = primitive_central_idempotents(G, tower, over_k=True, seed=seed)
        report["k_blocks"] = [_block_entry(G, tower, b, seed) for b in k_blocks]
        report["k_block_of_orbit"] = list(corr.k_block_of_orbit)
    return report


def _generating_maps(aut_maps) -> list:
    """Greedy generating subset of a finite set of automorphisms."""
    maps = sorted(aut_maps, key=lambda m: m.images)
    if not maps:
        return []
    identity = next(m for m in maps if m.images == m.domain.elems)
    gens: list = []
    generated = {identity.images}
    for m in maps:
        if m.images in generated:
            continue
        gens.append(m)
        frontier = [identity]
        generated = {identity.images}
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = g.compose(cur)
                if nxt.images not in generated:
                    generated.add(nxt.images)
                    frontier.append(nxt)
        if len(generated) == len(maps):
            break
    return gens


def _fusion_system_report(G, tower, block, seed) -> dict:
    mp = maximal_pairs(G, tower, block, seed)
    root = mp.pairs[0]
    system = block_fusion(G, tower, block, root, seed)
    P = root.subgroup
    sat = saturation_report(system)
    hom_counts = {}
    for Q in system.subgroups:
        for R in system.subgroups:
            key = f"{','.join(map(str, Q.elems))}|{','.join(map(str, R.elems))}"
            hom_counts[key] = len(system.hom_set(Q, R))
    return {
        "block_index": block.index,
        "defect_order": mp.defect_order,
        "maximal_pairs": [{"P": list(pr.subgroup.elems), "e": pr.block.index,
                           "defect_order": mp.defect_order} for pr in mp.pairs],
        "root": {"P": list(P.elems), "e": root.block.index},
        "aut_order": len(system.aut_set(P)),
        "aut_generators": [list(m.images) for m in _generating_maps(system.aut_set(P))],
        "inner_aut_order": len(system.aut_set(P)) // sat.aut_index,
        "hom_counts": hom_counts,
        "saturated": sat.saturated,
        "sylow_axiom": sat.sylow_ok,
        "extension_axiom": sat.extension_ok,
        "sylow_index": sat.aut_index,
        "witness": sat.witness,
        "centric": [list(Q.elems) for Q in system.subgroups if is_centric(system, Q)],
        "fully_normalized": [list(Q.elems) for Q in system.subgroups
                             if fully_normalized(system, Q)],
    }


def fusion_report(G, tower, block_sel="all", seed: int = 0) -> dict:
    l_blocks = primitive_central_idempotents(G, tower, over_k=False, seed=seed)
    if block_sel == "all":
        selected = list(l_blocks)
    else:
        selected = [l_blocks[int(block_sel)]]
    return {
        "group": G.name,
        "order": G.order,
        "tower": _tower_dict(tower),
        "systems": [_fusion_system_report(G, tower, b, seed) for b in selected],
    }


def descent_report(G, tower, block_sel="all", seed: int = 0) -> dict:
    l_blocks = primitive_central_idempotents(G, tower, over_k=False, seed=seed)
    if block_sel == "all":
        seen: set[int] = set()
        selected = []
        for b in l_blocks:
            if b.index in seen:
                continue
            seen.update(x.index for x in galois_orbit(b))
            selected.append(b)
    else:
        selected = [l_blocks[int(block_sel)]]
    out = []
    for b in selected:
        rep, _ = run_descent(G, tower, b, seed)
        out.append(rep.to_json())
    return {
        "group": G.name,
        "order": G.order,
        "tower": _tower_dict(tower),
        "descents": out,
        "all_ok": all(r["all_ok"] for r in out),
    }


@dataclass(frozen=True)
class CorpusEntry:
    """One corpus line: a group file, a field tower, a block selector and
    the checks to run (None means all)."""

    group: str
    p: int
    m: int = 1
    n: int = 1
    block: str = "all"
    checks: tuple[str, ...] | None = None
    label: str | None = None

    @staticmethod
    def from_dict(d: dict) -> "CorpusEntry":
        return CorpusEntry(
            group=d["group"], p=int(d["p"]), m=int(d.get("m", 1)), n=int(d.get("n", 1)),
            block=str(d.get("block", "all")),
            checks=tuple(d["checks"]) if d.get("checks") else None,
            label=d.get("label"))

    def wants(self, check: str) -> bool:
        return self.checks is None or check in self.checks


ALL_CHECKS = ("blocks", "correspondence", "principal", "descent")


def run_entry(entry: CorpusEntry, base: Path | None = None, seed: int = 0,
              keep_objects: bool = False) -> dict:
    """Run every requested check for one corpus entry; never raises, error
    text is embedded instead."""
    label = entry.label or f"{entry.group}@p{entry.p}m{entry.m}n{entry.n}"
    objects: dict = {}
    try:
        G = load_group_file(entry.group, base)
        tower = make_tower(entry.p, entry.m, entry.n)
        report: dict = {"label": label, "group": G.name, "order": G.order,
                        "tower": _tower_dict(tower)}
        verdicts = []
        if entry.wants("blocks"):
            report["blocks"] = blocks_report(G, tower, seed)
        if entry.wants("correspondence"):
            corr = block_correspondence(G, tower, seed)
            report["correspondence"] = {
                "orbits": [list(o) for o in corr.orbits],
                "k_block_of_orbit": list(corr.k_block_of_orbit),
                "defect_orders": list(corr.defect_orders_l),
                "bijective": corr.bijective,
                "defects_match": corr.defects_match,
            }
            verdicts += [corr.bijective, corr.defects_match]
        if entry.wants("principal"):
            l_blocks = primitive_central_idempotents(G, tower, over_k=False, seed=seed)
            pb = principal_block(l_blocks)
            mp = maximal_pairs(G, tower, pb, seed)
            root = mp.pairs[0]
            system = block_fusion(G, tower, pb, root, seed)
            same = fusion_equal(system, group_fusion(root.subgroup, G))
            sat = is_saturated(system)
            report["principal"] = {"block_index": pb.index, "sylow_order": mp.sylow.order,
                                   "matches_group_fusion": same, "saturated": sat}
            verdicts += [same, sat, root.subgroup.order == mp.sylow.order]
        if entry.wants("descent"):
            l_blocks = primitive_central_idempotents(G, tower, over_k=False, seed=seed)
            if entry.block == "all":
                seen: set[int] = set()
                selected = []
                for b in l_blocks:
                    if b.index in seen:
                        continue
                    seen.update(x.index for x in galois_orbit(b))
                    selected.append(b)
            else:
                selected = [l_blocks[int(entry.block)]]
            descents = []
            contexts = []
            for b in selected:
                rep, ctx = run_descent(G, tower, b, seed)
                axioms_ok = True
                try:
                    assert_fusion_axioms(ctx.system_l)
                    assert_fusion_axioms(ctx.system_k)
                except Exception:
                    axioms_ok = False
                d = rep.to_json()
                d["axioms_ok"] = axioms_ok
                descents.append(d)
                contexts.append(ctx)
                verdicts += [rep.all_ok, axioms_ok]
            report["descent"] = descents
            objects["contexts"] = contexts
        report["ok"] = all(verdicts)
        if keep_objects:
            objects["group"] = G
            objects["tower"] = tower
            report["_objects"] = objects
        return report
    except Exception as exc:  # error path: surface, do not crash the sweep
        return {"label": label, "error": f"{type(exc).__name__}: {exc}", "ok": False}


def _strip_objects(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "_objects"}


def _worker(payload: tuple) -> dict:
    entry_dict, base_str, seed = payload
    base = Path(base_str) if base_str else None
    return run_entry(CorpusEntry.from_dict(entry_dict), base, seed)


def run_corpus(entries, base: Path | None = None, jobs: int = 1, seed: int = 0,
               keep_objects: bool = False) -> dict:
    entries = list(entries)
    if jobs > 1 and not keep_objects:
        payloads = [(e.__dict__ | {"checks": list(e.checks) if e.checks else None},
                     str(base) if base else "", seed) for e in entries]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, payloads))
    else:
        results = [run_entry(e, base, seed, keep_objects) for e in entries]
    stripped = [_strip_objects(r) for r in results]
    report = {"version": __version__, "entries": stripped,
              "ok": all(r.get("ok", False) for r in stripped)}
    if keep_objects:
        report["_raw"] = results
    return report


def load_corpus(path: Path) -> list[CorpusEntry]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return [CorpusEntry.from_dict(d) for d in data.get("entries", [])]


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _flatten(prefix: str, value, lines: list[str]) -> None:
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], lines)
    elif isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            lines.append(f"{prefix} = {value}")
        else:
            for i, v in enumerate(value):
                _flatten(f"{prefix}[{i}]", v, lines)
    else:
        lines.append(f"{prefix} = {value}")


def render_table(report: dict) -> str:
    lines: list[str] = []
    _flatten("", report, lines)
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str) -> None:
    text = render_json(report) if fmt == "json" else render_table(report)
    sys.stdout.write(text)


def _add_common(parser) -> None:
    parser.add_argument("--group", required=True, help="group description file or builtin:<name>")
    parser.add_argument("--p", type=int, required=True)
    parser.add_argument("--m", type=int, default=1)
    parser.add_argument("--n", type=int, default=1)
    parser.add_argument("--format", choices=("json", "table"), default="json")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="blockfuse",
                                     description="blocks, Brauer pairs and fusion systems "
                                                 "of finite-group algebras over finite fields")
    sub = parser.add_subparsers(dest="command", required=True)

    p_blocks = sub.add_parser("blocks", help="block idempotents and defect groups")
    _add_common(p_blocks)

    p_fusion = sub.add_parser("fusion", help="block fusion systems and saturation")
    _add_common(p_fusion)
    p_fusion.add_argument("--block", default="all", help="block index or 'all'")

    p_descent = sub.add_parser("descent", help="Galois-descent verification for one tower")
    _add_common(p_descent)
    p_descent.add_argument("--block", default="all", help="L-block index or 'all' (orbit reps)")

    p_verify = sub.add_parser("verify", help="run a corpus and aggregate the verdicts")
    p_verify.add_argument("--corpus", default=None, help="corpus file (default: shipped corpus)")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--checks", default=None,
                          help="comma-separated subset of " + ",".join(ALL_CHECKS))
    p_verify.add_argument("--format", choices=("json", "table"), default="json")

    args = parser.parse_args(argv)
    seed = int(os.environ.get("BLOCKFUSE_SEED", "0"))

    if args.command == "verify":
        corpus_path = Path(args.corpus) if args.corpus else default_corpus_path()
        entries = load_corpus(corpus_path)
        if args.checks:
            wanted = tuple(args.checks.split(","))
            entries = [CorpusEntry(e.group, e.p, e.m, e.n, e.block, wanted, e.label)
                       for e in entries]
        report = run_corpus(entries, base=corpus_path.parent, jobs=args.jobs, seed=seed)
        _emit(report, args.format)
        return 0 if report["ok"] else 1

    G = load_group_file(args.group)
    tower = make_tower(args.p, args.m, args.n)
    if args.command == "blocks":
        report = blocks_report(G, tower, seed)
    elif args.command == "fusion":
        report = fusion_report(G, tower, args.block, seed)
    else:
        report = descent_report(G, tower, args.block, seed)
    _emit(report, args.format)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
