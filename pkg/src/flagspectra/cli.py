"""Command-line front end.

Subcommands: spectra, domination, sdr, width, corpus, dump-complex.  Outputs
are streams of JSON records (or CSV rows) with floats fixed at 12 significant
digits and a deterministic record order, so identical invocations produce
byte-identical files.  Exit codes: 0 all checks passed, 1 some check failed,
2 usage or parse error, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import corpus as corpus_mod
from .complexes import DEFAULT_SIMPLEX_CAP, build_flag_complex
from .domination import (
    EXACT_SEARCH_CAP,
    INDEP_SEARCH_CAP,
    best_representation_value,
    cycle_representation,
    domination_number,
    edge_incidence_representation,
    fractional_strong_domination,
    independent_domination_number,
    representation_from_json_dict,
    representation_value,
    total_domination_number,
    verify_gram_row_bound,
    verify_representation_connectivity_bound,
    verify_spectral_connectivity_bound,
)
from .errors import CapExceeded, InputFormatError
from .graphs import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    lambda_max,
    load_graph,
    random_gnp,
    spectral_gap,
    turan_graph,
)
from .hypergraphs import (
    SDR_FAMILY_CAP,
    WIDTH_SEARCH_CAP,
    compare_width_conditions,
    family_from_json_dict,
    fractional_width,
    hypergraph_from_json_dict,
    incidence_representation,
    sdr_search,
    verify_fractional_width_condition,
    verify_integral_width_condition,
    width,
)
from .reports import CheckRecord, records_to_csv, records_to_json_lines
from .spectral import (
    betti_profile,
    hodge_laplacian,
    symmetric_eigenvalues,
    verify_eigenvalue_recursion,
    verify_facet_degree_bound,
    verify_vanishing_threshold,
)


@dataclass
class RunConfig:
    command: str
    seed: int
    max_dim: int | None
    simplex_cap: int
    exact_cap: int
    indep_cap: int
    width_cap: int
    family_cap: int
    recursion_tol: float
    strict_tol: float
    output: str | None
    fmt: str

    def describe(self) -> str:
        return (
            f"seed={self.seed} max_dim={self.max_dim} simplex_cap={self.simplex_cap} "
            f"exact_cap={self.exact_cap} indep_cap={self.indep_cap} "
            f"width_cap={self.width_cap} family_cap={self.family_cap} "
            f"recursion_tol={self.recursion_tol:g} strict_tol={self.strict_tol:g}"
        )


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputFormatError(f"environment variable {name} must be an integer, got {raw!r}")


def _env_int_opt(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw in (None, ""):
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputFormatError(f"environment variable {name} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagspectra",
        description="Spectra of clique complexes, domination parameters, and "
        "disjoint-representative certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--seed", type=int, default=42, help="master seed, recorded in the output")
        p.add_argument(
            "--max-dim",
            type=int,
            default=_env_int_opt("FLAGSPECTRA_MAX_DIM"),
            help="dimension cap for complexes",
        )
        p.add_argument(
            "--simplex-cap",
            type=int,
            default=_env_int("FLAGSPECTRA_SIMPLEX_CAP", DEFAULT_SIMPLEX_CAP),
            help="per-dimension simplex count cap",
        )
        p.add_argument(
            "--exact-cap",
            type=int,
            default=_env_int("FLAGSPECTRA_EXACT_CAP", EXACT_SEARCH_CAP),
            help="vertex cap for exact domination searches",
        )
        p.add_argument(
            "--indep-cap",
            type=int,
            default=_env_int("FLAGSPECTRA_INDEP_CAP", INDEP_SEARCH_CAP),
            help="vertex cap for the independent domination search",
        )
        p.add_argument(
            "--width-cap",
            type=int,
            default=_env_int("FLAGSPECTRA_WIDTH_CAP", WIDTH_SEARCH_CAP),
            help="edge cap for exact width searches",
        )
        p.add_argument(
            "--family-cap",
            type=int,
            default=_env_int("FLAGSPECTRA_FAMILY_CAP", SDR_FAMILY_CAP),
            help="member cap for subset sweeps and representative searches",
        )
        p.add_argument(
            "--recursion-tol",
            type=float,
            default=1e-7,
            help="slack tolerance for the eigenvalue recursion check",
        )
        p.add_argument(
            "--strict-tol",
            type=float,
            default=1e-7,
            help="strictness tolerance for fractional-width margins",
        )
        p.add_argument("--output", default=None, help="output path (default: stdout)")
        p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")

    def add_graph_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph", help="graph file (JSON or 'n m' text form)")
        src.add_argument("--turan", nargs=2, type=int, metavar=("R", "L"))
        src.add_argument("--cycle", type=int, metavar="N")
        src.add_argument("--complete", type=int, metavar="N")
        src.add_argument("--gnp", nargs=3, metavar=("N", "P", "SEED"))

    p = sub.add_parser("spectra", help="eigenvalues, Betti numbers, connectivity, and the spectral checks")
    add_graph_source(p)
    p.add_argument("--independence", action="store_true", help="analyze the independent-set complex instead")
    add_common(p)

    p = sub.add_parser("domination", help="domination parameters and representation bounds")
    add_graph_source(p)
    p.add_argument(
        "--reps",
        default="edge-incidence",
        help="comma list of representations: edge-incidence, cycle, file:PATH",
    )
    add_common(p)

    p = sub.add_parser("sdr", help="disjoint representatives for a hypergraph family")
    p.add_argument("--family", required=True, help="family JSON file")
    add_common(p)

    p = sub.add_parser("width", help="width and fractional width of a hypergraph")
    p.add_argument("--hypergraph", required=True, help="hypergraph JSON file")
    add_common(p)

    p = sub.add_parser("corpus", help="run all verifiers over seeded corpora")
    p.add_argument("--graphs", type=int, default=200, help="number of random graphs")
    p.add_argument("--nmax", type=int, default=10, help="largest random graph size")
    p.add_argument("--families", type=int, default=100, help="number of random families")
    add_common(p)

    p = sub.add_parser("dump-complex", help="dump enumerated skeleta as JSON")
    add_graph_source(p)
    p.add_argument("--independence", action="store_true")
    add_common(p)

    return parser


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        seed=args.seed,
        max_dim=args.max_dim,
        simplex_cap=args.simplex_cap,
        exact_cap=args.exact_cap,
        indep_cap=args.indep_cap,
        width_cap=args.width_cap,
        family_cap=args.family_cap,
        recursion_tol=args.recursion_tol,
        strict_tol=args.strict_tol,
        output=args.output,
        fmt=args.fmt,
    )


def _resolve_graph(args) -> tuple[str, Graph]:
    if args.graph:
        return args.graph, load_graph(args.graph)
    if args.turan:
        r, ell = args.turan
        return f"turan({r},{ell})", turan_graph(r, ell)
    if args.cycle:
        return f"cycle({args.cycle})", cycle_graph(args.cycle)
    if args.complete:
        return f"complete({args.complete})", complete_graph(args.complete)
    if args.gnp:
        n, p, seed = int(args.gnp[0]), float(args.gnp[1]), int(args.gnp[2])
        return f"gnp(n={n},p={p},seed={seed})", random_gnp(n, p, seed)
    raise InputFormatError("no graph source given")


def _meta_record(cfg: RunConfig, instance: str) -> CheckRecord:
    return CheckRecord(
        check="run_config",
        claim="configuration recorded for reproducibility",
        instance=instance,
        passed=True,
        detail=cfg.describe(),
    )


def _value_record(check: str, claim: str, instance: str, value: float, k: int | None = None, detail: str = "") -> CheckRecord:
    return CheckRecord(
        check=check, claim=claim, instance=instance, k=k, lhs=value, passed=True, detail=detail
    )


def cmd_spectra(args) -> list[CheckRecord]:
    cfg = _config_from_args(args)
    label, g = _resolve_graph(args)
    base = complement(g) if args.independence else g
    if args.independence:
        label = f"independence({label})"
    records = [_meta_record(cfg, label)]
    max_dim = cfg.max_dim if cfg.max_dim is not None else base.n - 1
    x = build_flag_complex(base, max_dim=max_dim, simplex_cap=cfg.simplex_cap)
    if base.n >= 2:
        records.append(
            _value_record("spectral_gap", "second smallest Laplacian eigenvalue", label, spectral_gap(base))
        )
    records.append(
        _value_record("lambda_max", "largest Laplacian eigenvalue", label, lambda_max(base))
    )
    for k in range(x.max_dim + 1):
        if not x.skeleta[k]:
            break
        mu = float(symmetric_eigenvalues(hodge_laplacian(x, k))[0])
        records.append(
            _value_record("min_hodge_eigenvalue", "smallest degree-k Laplacian eigenvalue", label, mu, k=k)
        )
    profile = betti_profile(x)
    for k, b in enumerate(profile.betti):
        records.append(
            _value_record("reduced_betti", "reduced Betti number of the complex", label, float(b), k=k)
        )
    eta = profile.connectivity
    records.append(
        CheckRecord(
            check="connectivity",
            claim="one plus least dimension with nonvanishing reduced cohomology",
            instance=label,
            lhs=None if eta.infinite else float(eta.floor),
            passed=True,
            detail=eta.describe(),
        )
    )
    records.extend(
        verify_eigenvalue_recursion(base, instance=label, tol=cfg.recursion_tol, simplex_cap=cfg.simplex_cap)
    )
    if base.n >= 2:
        records.extend(verify_vanishing_threshold(base, instance=label, simplex_cap=cfg.simplex_cap))
    records.extend(verify_facet_degree_bound(x, instance=label))
    return records


def _parse_reps(spec: str, g: Graph):
    reps = []
    names = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if part == "edge-incidence":
            reps.append(edge_incidence_representation(g))
        elif part == "cycle":
            if g.n % 3 != 0 or g != cycle_graph(g.n):
                raise InputFormatError("cycle representation requires the cycle graph on 3k vertices")
            reps.append(cycle_representation(g.n // 3))
        elif part.startswith("file:"):
            path = part[5:]
            with open(path, "r", encoding="utf-8") as fh:
                reps.append(representation_from_json_dict(g, json.load(fh)))
        else:
            raise InputFormatError(f"unknown representation {part!r}")
        names.append(part)
    if not reps:
        raise InputFormatError("no representations given")
    return names, reps


def cmd_domination(args) -> list[CheckRecord]:
    cfg = _config_from_args(args)
    label, g = _resolve_graph(args)
    records = [_meta_record(cfg, label)]
    for fn, cap in (
        (domination_number, cfg.exact_cap),
        (total_domination_number, cfg.exact_cap),
        (independent_domination_number, cfg.indep_cap),
    ):
        try:
            rep = fn(g, cap=cap)
        except ValueError as exc:
            records.append(
                CheckRecord(
                    check=fn.__name__, claim="exact parameter", instance=label, passed=True, detail=str(exc)
                )
            )
            continue
        records.append(
            _value_record(rep.parameter, "exact parameter with witness", label, float(rep.value), detail=f"witness={rep.witness}")
        )
    frac = fractional_strong_domination(g)
    records.append(
        _value_record(frac.parameter, "strong fractional domination optimum", label, float(frac.value), detail=frac.notes)
    )
    names, reps = _parse_reps(args.reps, g)
    for name, rep in zip(names, reps):
        value = representation_value(rep)
        records.append(
            _value_record(
                "representation_value",
                "covering optimum over the representation Gram matrix",
                f"{label} rep={name}",
                float(value.value),
            )
        )
        records.append(verify_gram_row_bound(g, rep, instance=f"{label} rep={name}"))
    bound = best_representation_value(g, reps)
    records.append(
        _value_record(
            bound.parameter,
            "certified lower bound from the supplied representations",
            label,
            float(bound.value),
        )
    )
    records.append(verify_spectral_connectivity_bound(g, instance=label, simplex_cap=cfg.simplex_cap))
    records.extend(
        verify_representation_connectivity_bound(g, reps, instance=label, simplex_cap=cfg.simplex_cap)
    )
    return records


def cmd_sdr(args) -> list[CheckRecord]:
    cfg = _config_from_args(args)
    with open(args.family, "r", encoding="utf-8") as fh:
        try:
            fam = family_from_json_dict(json.load(fh))
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"{args.family}: {exc}") from exc
    label = args.family
    records = [_meta_record(cfg, label)]
    search = sdr_search(fam, family_cap=cfg.family_cap)
    records.append(
        CheckRecord(
            check="sdr_search",
            claim="exhaustive search for a system of disjoint representatives",
            instance=label,
            passed=True,
            detail=(
                f"representatives {search.representatives}"
                if search.representatives is not None
                else f"none exist (search hash {search.transcript_hash[:16]})"
            ),
        )
    )
    records.extend(
        compare_width_conditions(
            fam, instance=label, tol=cfg.strict_tol, width_cap=cfg.width_cap, family_cap=cfg.family_cap
        )
    )
    return records


def cmd_width(args) -> list[CheckRecord]:
    cfg = _config_from_args(args)
    with open(args.hypergraph, "r", encoding="utf-8") as fh:
        try:
            h = hypergraph_from_json_dict(json.load(fh))
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"{args.hypergraph}: {exc}") from exc
    label = args.hypergraph
    records = [_meta_record(cfg, label)]
    w, witness = width(h, cap=cfg.width_cap)
    records.append(
        _value_record("width", "fewest edges meeting every edge", label, float(w), detail=f"witness edges {witness}")
    )
    wstar = fractional_width(h)
    records.append(_value_record("fractional_width", "covering LP optimum", label, wstar))
    records.append(
        CheckRecord(
            check="width_relaxation",
            claim="fractional width <= width",
            instance=label,
            lhs=wstar,
            rhs=float(w),
            slack=float(w) - wstar,
            passed=wstar <= w + 1e-7,
        )
    )
    rep_value = representation_value(incidence_representation(h))
    records.append(
        CheckRecord(
            check="incidence_width_identity",
            claim="line-graph incidence representation value == fractional width",
            instance=label,
            lhs=float(rep_value.value),
            rhs=wstar,
            slack=abs(float(rep_value.value) - wstar),
            passed=abs(float(rep_value.value) - wstar) <= 1e-6,
        )
    )
    return records


def cmd_corpus(args) -> list[CheckRecord]:
    cfg = _config_from_args(args)
    records = [_meta_record(cfg, f"corpus(seed={cfg.seed})")]
    sizes = tuple(n for n in corpus_mod.GNP_SIZES if n <= args.nmax)
    graphs = corpus_mod.gnp_corpus(count=args.graphs, seed=cfg.seed, sizes=sizes)
    graphs += corpus_mod.turan_corpus()
    graphs += corpus_mod.cycle_corpus()
    for label, g in graphs:
        try:
            records.extend(
                verify_eigenvalue_recursion(g, instance=label, tol=cfg.recursion_tol, simplex_cap=cfg.simplex_cap)
            )
            records.extend(verify_vanishing_threshold(g, instance=label, simplex_cap=cfg.simplex_cap))
            x = build_flag_complex(g, max_dim=g.n - 1, simplex_cap=cfg.simplex_cap)
            profile = betti_profile(x)  # raises on kernel/rank disagreement
            records.append(
                CheckRecord(
                    check="hodge_consistency",
                    claim="kernel-count Betti equals rank-nullity Betti in every dimension",
                    instance=label,
                    passed=True,
                    detail=f"betti={list(profile.betti)}",
                )
            )
            gap = spectral_gap(g)
            mu0 = float(symmetric_eigenvalues(hodge_laplacian(x, 0))[0])
            records.append(
                CheckRecord(
                    check="gap_consistency",
                    claim="smallest degree-0 Laplacian eigenvalue equals the spectral gap",
                    instance=label,
                    lhs=mu0,
                    rhs=gap,
                    slack=abs(mu0 - gap),
                    passed=abs(mu0 - gap) <= 1e-8,
                )
            )
            lam = lambda_max(g)
            gap_comp = spectral_gap(complement(g)) if g.n >= 2 else 0.0
            records.append(
                CheckRecord(
                    check="complement_spectrum",
                    claim="lambda_max(G) == n - lambda_2(complement)",
                    instance=label,
                    lhs=lam,
                    rhs=g.n - gap_comp,
                    slack=abs(lam - (g.n - gap_comp)),
                    passed=abs(lam - (g.n - gap_comp)) <= 1e-8,
                )
            )
            records.extend(verify_facet_degree_bound(x, instance=label))
            records.append(verify_spectral_connectivity_bound(g, instance=label, simplex_cap=cfg.simplex_cap))
            if g.num_edges:
                rep = edge_incidence_representation(g)
                records.append(verify_gram_row_bound(g, rep, instance=label))
                records.extend(
                    verify_representation_connectivity_bound(g, [rep], instance=label, simplex_cap=cfg.simplex_cap)
                )
        except (CapExceeded, RuntimeError, ValueError) as exc:
            records.append(
                CheckRecord(
                    check="error",
                    claim="instance-level failure",
                    instance=label,
                    passed=False,
                    detail=f"{type(exc).__name__}: {exc}",
                )
            )
    for label, fam in corpus_mod.family_corpus(count=args.families, seed=cfg.seed):
        try:
            records.extend(
                verify_fractional_width_condition(fam, instance=label, tol=cfg.strict_tol, family_cap=cfg.family_cap)
            )
            records.extend(
                verify_integral_width_condition(
                    fam, instance=label, width_cap=cfg.width_cap, family_cap=cfg.family_cap
                )
            )
        except (CapExceeded, RuntimeError, ValueError) as exc:
            records.append(
                CheckRecord(
                    check="error",
                    claim="instance-level failure",
                    instance=label,
                    passed=False,
                    detail=f"{type(exc).__name__}: {exc}",
                )
            )
    records.extend(_summaries(records))
    return records


def _summaries(records) -> list[CheckRecord]:
    by_check: dict[str, list[CheckRecord]] = {}
    for rec in records:
        by_check.setdefault(rec.check, []).append(rec)
    out = []
    for name in sorted(by_check):
        recs = by_check[name]
        passed = sum(1 for r in recs if r.passed is True)
        failed = sum(1 for r in recs if r.failed)
        undecided = sum(1 for r in recs if r.inconclusive)
        slacks = [r.slack for r in recs if r.slack is not None]
        worst = min(slacks) if slacks else None
        out.append(
            CheckRecord(
                check="summary",
                claim=f"totals for {name}",
                instance=f"corpus:{name}",
                lhs=float(passed),
                rhs=float(failed),
                slack=worst,
                passed=failed == 0,
                detail=f"pass={passed} fail={failed} inconclusive={undecided}",
            )
        )
    return out


def cmd_dump_complex(args) -> str:
    cfg = _config_from_args(args)
    label, g = _resolve_graph(args)
    base = complement(g) if args.independence else g
    max_dim = cfg.max_dim if cfg.max_dim is not None else base.n - 1
    x = build_flag_complex(base, max_dim=max_dim, simplex_cap=cfg.simplex_cap)
    payload = {
        "instance": label if not args.independence else f"independence({label})",
        "dims": list(x.counts()),
        "skeleta": {str(k): [list(s) for s in x.skeleta[k]] for k in range(x.max_dim + 1)},
    }
    return json.dumps(payload, separators=(", ", ": "), sort_keys=True) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        if args.command == "dump-complex":
            _emit(cmd_dump_complex(args), args.output)
            return 0
        handler = {
            "spectra": cmd_spectra,
            "domination": cmd_domination,
            "sdr": cmd_sdr,
            "width": cmd_width,
            "corpus": cmd_corpus,
        }[args.command]
        records = handler(args)
    except CapExceeded as exc:
        sys.stderr.write(f"cap exceeded: {exc}\n")
        return 3
    except (InputFormatError, FileNotFoundError, json.JSONDecodeError, ValueError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2
    except RuntimeError as exc:
        # numerical failure surfaced by a check (rank mismatch, stalled solve)
        sys.stderr.write(f"check failed: {exc}\n")
        return 1
    text = records_to_csv(records) if args.fmt == "csv" else records_to_json_lines(records)
    _emit(text, args.output)
    return 1 if any(rec.failed for rec in records) else 0


if __name__ == "__main__":
    sys.exit(main())
