"""Command-line interface.

Commands:

  validate      parse and validate an input file, print a summary
  tutte         two-variable Tutte polynomial (direct, dc, or both)
  interior      interior polynomial
  exterior      exterior polynomial
  coeffs        closed-form coefficient identities vs extracted coefficients
  check         invariance properties (translation, permutation, duality, ...)
  monotone      coefficientwise interior/exterior comparison of two inputs
  connectivity  connectivity profile and exterior ceiling table
  search        exhaustive search for polymatroids with given polynomials
  matroid-form  Laurent matroid-form transform
  suite         run the acceptance criteria

Inputs are JSON files; the kind is auto-detected from the shape
({"n", "bases"}, {"n", "f"}, {"vertices", "hyperedges"}, or the explicit
bipartite {"E", "V", "edges"} form) and can be forced with --as.  Rank
tables and hypergraphs are converted to their polymatroids where needed.

Exit codes: 0 ok; 1 a checked property/verdict failed; 2 malformed input;
3 validation error; 4 enumeration size limit; 5 internal error.  Every
error path prints "error: category=<Name>: <message>" on standard error.

Output is deterministic for a fixed (input, options) pair; --jobs is
accepted for interface stability and does not influence results (all
computations are pure and order-independent).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from random import Random

from . import acceptance, bipoly
from .activity import exterior_direct, interior_direct, tutte_direct
from .bipoly import BiPoly
from .core import (
    DEFAULT_MAX_BASES,
    Polymatroid,
    RankTable,
    enumerate_bases,
    surviving_labels,
)
from .errors import (
    InputError,
    ParseError,
    PolytutteError,
    SizeLimitExceeded,
    ValidationError,
)
from .formulas import (
    binomial,
    coefficient_report,
    coefficientwise_le,
    search_by_tutte,
)
from .hypergraph import Hypergraph, connectivity_profile, hypertree_polymatroid
from .recursion import (
    configure_caches,
    exterior_dc,
    interior_dc,
    matroid_form,
    tutte_dc,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_VALIDATION = 3
EXIT_LIMIT = 4
EXIT_INTERNAL = 5


@dataclass
class RunConfig:
    max_n: int = 16
    max_bases: int = DEFAULT_MAX_BASES
    memo_capacity: int = 1 << 20
    rng_seed: int = acceptance.DEFAULT_SEED
    jobs: int = 1
    fmt: str = "text"


@dataclass
class LoadedInput:
    kind: str                      # "bases" | "rank" | "hypergraph"
    polymatroid: Polymatroid
    hypergraph: Hypergraph | None = None


def _read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return data


def _detect_kind(data: dict) -> str:
    if "bases" in data:
        return "bases"
    if "f" in data:
        return "rank"
    if "hyperedges" in data or "edges" in data:
        return "hypergraph"
    raise ParseError("unrecognized input shape: need 'bases', 'f', 'hyperedges' or 'edges'")


def load_input(path: str, as_kind: str | None, config: RunConfig) -> LoadedInput:
    data = _read_json(path)
    kind = as_kind or _detect_kind(data)
    if kind == "bases":
        p = Polymatroid.from_json(data)
        _check_size(p.n, config)
        return LoadedInput("bases", p)
    if kind == "rank":
        table = RankTable.from_json(data)
        _check_size(table.n, config)
        return LoadedInput("rank", enumerate_bases(table, config.max_bases))
    if kind == "hypergraph":
        h = Hypergraph.from_json(data)
        _check_size(max(h.num_edges, 1), config)
        p, _ = hypertree_polymatroid(h, config.max_bases)
        return LoadedInput("hypergraph", p, h)
    raise InputError(f"unknown input kind {kind!r}")


def _check_size(n: int, config: RunConfig) -> None:
    if n > config.max_n:
        raise ValidationError(f"ground set size {n} exceeds --max-n {config.max_n}")


def _emit(config: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if config.fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _poly_json(p: BiPoly) -> dict:
    return {"terms": bipoly.to_json(p), "text": str(p)}


# -- commands -----------------------------------------------------------------------


def cmd_validate(args, config: RunConfig) -> int:
    loaded = load_input(args.input, args.as_kind, config)
    p = loaded.polymatroid
    payload = {
        "kind": loaded.kind,
        "n": p.n,
        "bases": len(p),
        "total": p.total(),
    }
    lines = [
        f"kind: {loaded.kind}",
        f"ground set: {p.n} elements",
        f"bases: {len(p)} (coordinate sum {p.total()})",
    ]
    if loaded.hypergraph is not None:
        h = loaded.hypergraph
        payload.update(vertices=h.num_vertices, hyperedges=h.num_edges)
        lines.append(f"hypergraph: {h.num_vertices} vertices, {h.num_edges} hyperedges")
    _emit(config, payload, lines)
    return EXIT_OK


def _run_methods(p: Polymatroid, method: str, direct_fn, dc_fn):
    out = {}
    if method in ("direct", "both"):
        out["direct"] = direct_fn(p)
    if method in ("dc", "both"):
        out["dc"] = dc_fn(p)
    return out


def _polynomial_command(args, config: RunConfig, direct_fn, dc_fn, name: str) -> int:
    loaded = load_input(args.input, args.as_kind, config)
    results = _run_methods(loaded.polymatroid, args.method, direct_fn, dc_fn)
    payload: dict = {name: {k: _poly_json(v) for k, v in results.items()}}
    lines = []
    for k in ("direct", "dc"):
        if k in results:
            prefix = f"{k}: " if args.method == "both" else ""
            lines.append(f"{prefix}{results[k]}")
    code = EXIT_OK
    if args.method == "both":
        match = results["direct"] == results["dc"]
        payload["match"] = match
        lines.append("MATCH" if match else "MISMATCH")
        if not match:
            code = EXIT_VIOLATION
    _emit(config, payload, lines)
    return code


def cmd_tutte(args, config: RunConfig) -> int:
    return _polynomial_command(args, config, tutte_direct, tutte_dc, "tutte")


def cmd_interior(args, config: RunConfig) -> int:
    return _polynomial_command(args, config, interior_direct, interior_dc, "interior")


def cmd_exterior(args, config: RunConfig) -> int:
    return _polynomial_command(args, config, exterior_direct, exterior_dc, "exterior")


def cmd_coeffs(args, config: RunConfig) -> int:
    loaded = load_input(args.input, args.as_kind, config)
    p = loaded.polymatroid
    rows = coefficient_report(p, tutte_dc(p))
    payload = {"rows": [r.to_json() for r in rows]}
    lines = []
    for r in rows:
        verdict = "OK" if r.match else "MISMATCH"
        lines.append(f"{r.formula}: predicted {r.predicted}, extracted {r.extracted} [{verdict}]")
    bad = [r for r in rows if not r.match]
    lines.append(f"{len(rows) - len(bad)}/{len(rows)} match")
    _emit(config, payload, lines)
    return EXIT_VIOLATION if bad else EXIT_OK


PROPERTIES = ("translation", "permutation", "duality", "divisibility", "count", "reversal")


def cmd_check(args, config: RunConfig) -> int:
    loaded = load_input(args.input, args.as_kind, config)
    p = loaded.polymatroid
    wanted = args.properties.split(",") if args.properties else list(PROPERTIES)
    unknown = set(wanted) - set(PROPERTIES)
    if unknown:
        raise InputError(f"unknown properties: {sorted(unknown)}; choose from {PROPERTIES}")
    rng = Random(config.rng_seed)
    t = tutte_dc(p)
    outcomes: dict[str, bool] = {}
    witness: dict[str, str] = {}
    for prop in wanted:
        ok = True
        if prop == "translation":
            for _ in range(5):
                c = tuple(rng.randint(-3, 3) for _ in range(p.n))
                if tutte_direct(p.translate(c)) != t:
                    ok, witness[prop] = False, f"c={c}"
                    break
        elif prop == "permutation":
            perms = list(itertools.permutations(range(1, p.n + 1)))
            for _ in range(5):
                w = perms[rng.randrange(len(perms))]
                if tutte_direct(p.permute(w)) != t:
                    ok, witness[prop] = False, f"w={w}"
                    break
        elif prop == "duality":
            ok = tutte_direct(p.dual()) == t.swap_vars()
        elif prop == "divisibility":
            ok = t.divisible_by_x_plus_y_minus_1()
        elif prop == "count":
            ok = t.evaluate(1, 1) == len(p)
        elif prop == "reversal":
            ok = (
                interior_dc(p) == t.substitute_one("y").reversed_in("x", p.n)
                and exterior_dc(p) == t.substitute_one("x").reversed_in("y", p.n)
            )
        outcomes[prop] = ok
    payload = {"properties": outcomes, "witness": witness}
    lines = [
        f"{prop}: {'OK' if ok else 'VIOLATED ' + witness.get(prop, '')}"
        for prop, ok in outcomes.items()
    ]
    _emit(config, payload, lines)
    return EXIT_OK if all(outcomes.values()) else EXIT_VIOLATION


def _parse_elements(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad element list {text!r}; expected comma-separated integers") from exc


def cmd_monotone(args, config: RunConfig) -> int:
    big = load_input(args.input, args.as_kind, config).polymatroid
    if args.relation == "subset":
        if not args.other:
            raise InputError("--relation subset needs the second input file")
        small = load_input(args.other, args.as_kind, config).polymatroid
        if small.n != big.n:
            raise ValidationError(f"ground sets differ: {small.n} vs {big.n}")
        stray = [v for v in small.bases if v not in big]
        if stray:
            _emit(config, {"relation_holds": False, "stray": list(map(list, stray[:3]))},
                  [f"not a subset: {stray[0]} is outside the larger polymatroid"])
            return EXIT_VIOLATION
    else:
        a = _parse_elements(args.delete)
        b = _parse_elements(args.contract)
        small = big.minor(a, b)
        labels = surviving_labels(big.n, set(a) | set(b))
        if args.other:
            claimed = load_input(args.other, args.as_kind, config).polymatroid
            if claimed != small:
                _emit(config, {"relation_holds": False},
                      [f"computed minor (delete {a}, contract {b}) differs from the given file"])
                return EXIT_VIOLATION
    reports = {
        "I": coefficientwise_le(interior_dc(small), interior_dc(big)),
        "X": coefficientwise_le(exterior_dc(small), exterior_dc(big)),
    }
    payload = {name: rep.to_json() for name, rep in reports.items()}
    lines = []
    if args.relation == "minor":
        payload["label_map"] = {k + 1: old for k, old in enumerate(labels)}
        lines.append(
            "surviving elements (new -> original): "
            + ", ".join(f"{k + 1}->{old}" for k, old in enumerate(labels))
        )
    for name, rep in reports.items():
        if rep.holds:
            lines.append(f"{name}: OK")
        else:
            lines.append(f"{name}: VIOLATED at x^{rep.witness[0]}*y^{rep.witness[1]} (excess {rep.difference})")
    _emit(config, payload, lines)
    return EXIT_OK if all(r.holds for r in reports.values()) else EXIT_VIOLATION


def cmd_connectivity(args, config: RunConfig) -> int:
    data = _read_json(args.input)
    h = Hypergraph.from_json(data)
    _check_size(max(h.num_edges, 1), config)
    k_max = connectivity_profile(h)
    payload: dict = {"k_max": k_max, "vertices": h.num_vertices, "hyperedges": h.num_edges}
    lines = [f"k_max = {k_max}" + (" (incidence graph disconnected)" if k_max < 0 else "")]
    code = EXIT_OK
    if h.num_edges >= 1:
        p, _ = hypertree_polymatroid(h, config.max_bases)
        x = exterior_dc(p)
        rows = []
        for i in range(max(k_max, 0) + 1):
            ceiling = binomial(h.num_vertices + i - 2, i)
            actual = x.coeff(0, i)
            rows.append({"i": i, "ceiling": ceiling, "actual": actual})
            lines.append(f"y^{i}: {actual} = {ceiling}")
        payload["rows"] = rows
        prefix = -1
        for k in range(h.num_edges + 1):
            if x.coeff(0, k) == binomial(h.num_vertices + k - 2, k):
                prefix = k
            else:
                break
        agreement = (k_max == prefix) if k_max >= 0 else True
        payload["profile_matches_coefficients"] = agreement
        if not agreement:
            lines.append(f"WARNING: ceiling prefix {prefix} disagrees with profile {k_max}")
            code = EXIT_VIOLATION
    _emit(config, payload, lines)
    return code


def _parse_target(entry) -> BiPoly:
    if isinstance(entry, str):
        return bipoly.parse(entry)
    if isinstance(entry, list):
        return bipoly.from_json(entry)
    raise ParseError(f"target must be polynomial text or term triples, got {entry!r}")


def cmd_search(args, config: RunConfig) -> int:
    data = _read_json(args.targets)
    if "targets" not in data or not isinstance(data["targets"], list):
        raise ParseError("targets file needs a 'targets' list")
    targets = [_parse_target(t) for t in data["targets"]]
    matches = search_by_tutte(targets, max_n=args.n, max_rank=args.max_rank)
    by_target: dict[int, list] = {i: [] for i in range(len(targets))}
    for m in matches:
        by_target[m.target_index].append(m)
    payload = {"targets": []}
    lines = []
    for idx, t in enumerate(targets):
        found = by_target[idx]
        examples = [[list(v) for v in m.polymatroid.bases] for m in found[:3]]
        payload["targets"].append(
            {"polynomial": str(t), "matches": len(found), "examples": examples}
        )
        if found:
            lines.append(f"target {idx} ({t}): {len(found)} matches, e.g. {examples[0]}")
        else:
            lines.append(f"target {idx} ({t}): no match")
    _emit(config, payload, lines)
    return EXIT_OK


def cmd_matroid_form(args, config: RunConfig) -> int:
    loaded = load_input(args.input, args.as_kind, config)
    p = loaded.polymatroid
    d = args.rank if args.rank is not None else p.total()
    result = matroid_form(p, d)
    _emit(
        config,
        {"matroid_form": _poly_json(result), "rank": d},
        [str(result)],
    )
    return EXIT_OK


def cmd_suite(args, config: RunConfig) -> int:
    results = acceptance.run_all(seed=config.rng_seed, jobs=config.jobs)
    payload = {"criteria": [r.to_json() for r in results]}
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    _emit(config, payload, lines)
    return EXIT_OK if ok else EXIT_VIOLATION


# -- argument parsing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polytutte",
        description="Exact Tutte-type invariants of integer polymatroids",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED,
                        help="seed for randomized checks (default pinned for reproducibility)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker budget; results never depend on it")
    parser.add_argument("--max-bases", type=int, default=DEFAULT_MAX_BASES,
                        help="cap on enumerated basis vectors")
    parser.add_argument("--max-n", type=int, default=16, help="cap on ground set size")
    parser.add_argument("--memo-capacity", type=int, default=1 << 20,
                        help="bound on the recursion memo caches")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(sp, with_method=False):
        sp.add_argument("input", help="JSON input file")
        sp.add_argument("--as", dest="as_kind", choices=("bases", "rank", "hypergraph"),
                        help="override input kind auto-detection")
        if with_method:
            sp.add_argument("--method", choices=("direct", "dc", "both"), default="dc")

    add_input(sub.add_parser("validate", help="validate an input file"))
    add_input(sub.add_parser("tutte", help="two-variable Tutte polynomial"), True)
    add_input(sub.add_parser("interior", help="interior polynomial"), True)
    add_input(sub.add_parser("exterior", help="exterior polynomial"), True)
    add_input(sub.add_parser("coeffs", help="coefficient identities report"))

    sp = sub.add_parser("check", help="invariance properties")
    add_input(sp)
    sp.add_argument("--properties", help=f"comma list from {','.join(PROPERTIES)}")

    sp = sub.add_parser("monotone", help="coefficientwise interior/exterior comparison")
    sp.add_argument("input", help="the larger polymatroid")
    sp.add_argument("other", nargs="?", help="the smaller polymatroid (subset relation)")
    sp.add_argument("--as", dest="as_kind", choices=("bases", "rank", "hypergraph"))
    sp.add_argument("--relation", choices=("subset", "minor"), default="subset")
    sp.add_argument("--delete", help="elements to delete (minor relation)")
    sp.add_argument("--contract", help="elements to contract (minor relation)")

    sp = sub.add_parser("connectivity", help="connectivity profile vs exterior ceiling")
    sp.add_argument("input", help="hypergraph JSON file")

    sp = sub.add_parser("search", help="search small polymatroids by Tutte polynomial")
    sp.add_argument("--targets", required=True, help="JSON file with a 'targets' list")
    sp.add_argument("--n", type=int, default=3, help="largest ground set size scanned")
    sp.add_argument("--max-rank", type=int, default=4, help="largest rank value scanned")

    sp = sub.add_parser("matroid-form", help="Laurent matroid-form transform")
    add_input(sp)
    sp.add_argument("--rank", type=int, help="rank parameter d (default: full rank)")

    sub.add_parser("suite", help="run the acceptance criteria")
    return parser


COMMANDS = {
    "validate": cmd_validate,
    "tutte": cmd_tutte,
    "interior": cmd_interior,
    "exterior": cmd_exterior,
    "coeffs": cmd_coeffs,
    "check": cmd_check,
    "monotone": cmd_monotone,
    "connectivity": cmd_connectivity,
    "search": cmd_search,
    "matroid-form": cmd_matroid_form,
    "suite": cmd_suite,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        max_n=args.max_n,
        max_bases=args.max_bases,
        memo_capacity=args.memo_capacity,
        rng_seed=args.seed,
        jobs=args.jobs,
        fmt=args.format,
    )
    try:
        for field_name in ("max_n", "max_bases", "memo_capacity", "jobs"):
            if getattr(config, field_name) < 1:
                raise InputError(f"--{field_name.replace('_', '-')} must be positive")
        if config.memo_capacity != 1 << 20:
            configure_caches(config.memo_capacity)
        return COMMANDS[args.command](args, config)
    except InputError as exc:
        print(f"error: category={exc.category}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitExceeded as exc:
        print(f"error: category={exc.category}: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValidationError as exc:
        print(f"error: category={exc.category}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except PolytutteError as exc:
        print(f"error: category={exc.category}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
