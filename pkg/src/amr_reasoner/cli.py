"""Command-line interface.

Every subcommand echoes its full effective configuration as ``# key=value``
header lines before its output, so any report can be reproduced from the
report alone. Exit codes: 0 on success, 2 when individual samples failed
(bad documents, enumeration caps), 1 on fatal errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .amr.document import AlignedAmrDocument, build_document_tree
from .amr.penman import serialize_penman
from .amr.tree import AmrTree, Constant, Instance
from .errors import AmrReasonerError, UndefinedCollapsability
from .harness.evaluate import bucket_by_collapsability, evaluate, load_corpus
from .harness.match import MatchConfig, match_tree_sets
from .harness.report import (
    METRIC_COLUMNS,
    RECORD_COLUMNS,
    format_cell,
    metric_row,
    record_rows,
    render_bucket_figure,
    render_metrics_figure,
    render_stats_figure,
    render_sweep_figure,
    write_delimited,
)
from .harness.stats import dataset_stats
from .harness.sweep import parse_sweep_spec, sweep_axis
from .logic.convert import VerdictLexicon, amr_to_formula, rot_to_implication, sst_to_facts
from .logic.notation import format_facts, format_formula, parse_clause_file, parse_literal
from .merge import MergeConfig, collapsability, enumerate_merge_trees, total_merge_width
from .prover.resolution import Proof, ProverConfig, prove
from .similarity import hybrid_similarity

_PROVER_DEFAULTS = ProverConfig()
_MERGE_DEFAULTS = MergeConfig()


def _print_meta(meta: dict[str, object]) -> None:
    for key, value in meta.items():
        print(f"# {key}={format_cell(value)}")


def _clause_text(clause) -> str:
    return str(clause) or "[]"


def _print_steps(proof: Proof) -> None:
    print(
        "step\tleft\tright\tunified_left\tunified_right\tsimilarity\tsubstitution\tresolvent"
    )
    for number, step in enumerate(proof.steps, 1):
        print(
            f"{number}\t{_clause_text(step.left)}\t{_clause_text(step.right)}"
            f"\t{step.left_literal}\t{step.right_literal}"
            f"\t{step.similarity:.6f}\t{step.substitution}\t{_clause_text(step.resolvent)}"
        )


def _safe_collapsability(tree_set) -> float | None:
    try:
        return collapsability(tree_set)
    except UndefinedCollapsability:
        return None


def _lexicon(args: argparse.Namespace) -> VerdictLexicon:
    if getattr(args, "lexicon", None):
        return VerdictLexicon.load(args.lexicon)
    return VerdictLexicon.default()


def _prover_config(args: argparse.Namespace) -> ProverConfig:
    return ProverConfig(
        similarity_threshold=args.threshold,
        max_proof_depth=args.max_depth,
        max_resolvent_width=args.max_resolvent_width,
    )


def _merge_config(args: argparse.Namespace) -> MergeConfig:
    return MergeConfig(
        max_merge_width=args.max_width,
        min_merge_depth=args.min_depth,
        strict_min_depth=args.strict_min_depth,
        max_variants=args.max_variants,
    )


def _prover_meta(config: ProverConfig) -> dict[str, object]:
    return {
        "threshold": config.similarity_threshold,
        "max_depth": config.max_proof_depth,
        "max_resolvent_width": config.max_resolvent_width,
    }


def _merge_meta(config: MergeConfig) -> dict[str, object]:
    return {
        "max_width": config.max_merge_width,
        "min_depth": config.min_merge_depth,
        "strict_min_depth": config.strict_min_depth,
        "max_variants": config.max_variants,
    }


def _parse_bucket_edges(text: str) -> list[float]:
    values = sorted({float(part) for part in text.split(",") if part.strip()})
    return [value for value in values if 0.0 < value < 1.0]


# -- subcommands ----------------------------------------------------------------


def _cmd_parse(args: argparse.Namespace) -> int:
    doc = AlignedAmrDocument.load(args.document)
    doc.validate()
    tree = build_document_tree(doc)
    embedded = sum(
        1
        for node in tree.nodes.values()
        if isinstance(node, (Instance, Constant)) and node.embedding is not None
    )
    _print_meta(
        {
            "command": "parse",
            "file": args.document,
            "id": doc.id,
            "nodes": len(tree),
            "instances": len(tree.instance_ids()),
            "max_depth": tree.max_depth(),
            "negations": tree.negation_edge_count(),
            "embedded_nodes": embedded,
        }
    )
    print(serialize_penman(tree))
    return 0


def _cmd_merge(args: argparse.Namespace) -> int:
    doc = AlignedAmrDocument.load(args.document)
    doc.validate()
    tree = build_document_tree(doc)
    config = _merge_config(args)
    tree_set = enumerate_merge_trees(tree, config)
    _print_meta(
        {
            "command": "merge",
            "file": args.document,
            "id": doc.id,
            **_merge_meta(config),
            "variants": len(tree_set),
            "collapsability": _safe_collapsability(tree_set),
        }
    )
    print("variant\tnodes\tmerge_width\tmerged_paths")
    for index, tree_variant in enumerate(tree_set.trees):
        if index == 0:
            paths = "-"
        else:
            paths = ",".join(path or "." for path in tree_set.provenance[index - 1])
        print(f"{index}\t{len(tree_variant)}\t{total_merge_width(tree_variant)}\t{paths}")
    return 0


def _cmd_logic(args: argparse.Namespace) -> int:
    doc = AlignedAmrDocument.load(args.document)
    doc.validate()
    tree = build_document_tree(doc)
    mode = "rot" if args.as_rot else "sst" if args.as_sst else "formula"
    meta: dict[str, object] = {"command": "logic", "file": args.document, "id": doc.id, "mode": mode}
    if mode == "rot":
        meta["lexicon"] = args.lexicon or "builtin"
        body = format_formula(rot_to_implication(tree, _lexicon(args)))
    elif mode == "sst":
        meta["namespace"] = args.namespace
        body = format_facts(sst_to_facts(tree, args.namespace))
    else:
        body = format_formula(amr_to_formula(tree))
    _print_meta(meta)
    print(body)
    return 0


def _cmd_prove(args: argparse.Namespace) -> int:
    clauses = parse_clause_file(Path(args.clauses).read_text(encoding="utf-8"))
    goal = parse_literal(args.goal)
    config = _prover_config(args)
    result = prove(list(clauses), goal, config, hybrid_similarity)
    _print_meta(
        {
            "command": "prove",
            "file": args.clauses,
            "goal": args.goal.strip(),
            **_prover_meta(config),
            "clauses": len(clauses),
            "proved": result.proved,
            "similarity": result.proof.similarity if result.proved else None,
            "steps": len(result.proof.steps) if result.proved else None,
            "cap_exceeded": result.cap_exceeded,
            "expanded": result.expanded,
        }
    )
    if result.proved:
        _print_steps(result.proof)
    return 0


def _cmd_match(args: argparse.Namespace) -> int:
    rot_doc = AlignedAmrDocument.load(args.rot)
    sst_doc = AlignedAmrDocument.load(args.sst)
    rot_doc.validate()
    sst_doc.validate()
    config = MatchConfig(
        prover=_prover_config(args),
        merge=_merge_config(args),
        all_verdicts=args.all_verdicts,
    )
    rot_set = enumerate_merge_trees(build_document_tree(rot_doc), config.merge)
    sst_set = enumerate_merge_trees(build_document_tree(sst_doc), config.merge)
    result = match_tree_sets(rot_set, sst_set, _lexicon(args), config)
    _print_meta(
        {
            "command": "match",
            "rot": args.rot,
            "sst": args.sst,
            "rot_id": rot_doc.id,
            "sst_id": sst_doc.id,
            **_prover_meta(config.prover),
            **_merge_meta(config.merge),
            "all_verdicts": config.all_verdicts,
            "lexicon": args.lexicon or "builtin",
            "rot_variants": len(rot_set),
            "sst_variants": len(sst_set),
            "collapsability_rot": _safe_collapsability(rot_set),
            "collapsability_sst": _safe_collapsability(sst_set),
            "matched": result.matched,
            "similarity": result.similarity,
            "goal": str(result.goal) if result.goal is not None else None,
            "rot_variant": result.rot_index,
            "sst_variant": result.sst_index,
            "pairs_tried": result.pairs_tried,
            "skipped": result.skipped,
            "cap_exceeded": result.cap_exceeded,
        }
    )
    if result.proof is not None:
        _print_steps(result.proof)
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    pairs = load_corpus(args.corpus)
    lexicon = _lexicon(args)
    config = MatchConfig(
        prover=_prover_config(args),
        merge=_merge_config(args),
        all_verdicts=args.all_verdicts,
    )
    run = evaluate(pairs, lexicon, config, args.seed)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    meta: dict[str, object] = {
        "command": "eval",
        "corpus": args.corpus,
        "out_dir": args.out_dir,
        "seed": args.seed,
        **_prover_meta(config.prover),
        **_merge_meta(config.merge),
        "all_verdicts": config.all_verdicts,
        "lexicon": args.lexicon or "builtin",
        "pairs": len(pairs),
    }
    files = [
        write_delimited(out_dir / "records.tsv", meta, RECORD_COLUMNS, record_rows(run.records)),
        write_delimited(out_dir / "metrics.tsv", meta, METRIC_COLUMNS, [metric_row(run.metrics)]),
        render_metrics_figure(run.metrics, out_dir / "metrics.png"),
    ]
    if args.buckets:
        buckets = bucket_by_collapsability(run.records, _parse_bucket_edges(args.buckets))
        bucket_meta = {**meta, "buckets": args.buckets}
        rows = [
            (b.label, b.lower, b.upper, b.records, *metric_row(b.metrics)) for b in buckets
        ]
        files.append(
            write_delimited(
                out_dir / "buckets.tsv",
                bucket_meta,
                ("bucket", "lower", "upper", "records", *METRIC_COLUMNS),
                rows,
            )
        )
        files.append(render_bucket_figure(buckets, out_dir / "buckets.png"))
    if args.sweep:
        axis, values = parse_sweep_spec(args.sweep)
        points = sweep_axis(pairs, lexicon, config, args.seed, axis, values)
        sweep_meta = {**meta, "sweep": args.sweep}
        rows = []
        for point in points:
            effective_threshold = point.value if axis == "threshold" else args.threshold
            effective_width = int(point.value) if axis == "max-width" else args.max_width
            rows.append((point.value, effective_threshold, effective_width, *metric_row(point.metrics)))
        files.append(
            write_delimited(
                out_dir / "sweep.tsv",
                sweep_meta,
                ("value", "threshold", "max_width", *METRIC_COLUMNS),
                rows,
            )
        )
        files.append(render_sweep_figure(axis, points, out_dir / "sweep.png"))
    summary = dict(meta)
    for name, value in zip(METRIC_COLUMNS, metric_row(run.metrics)):
        summary[name] = value
    summary["files"] = ",".join(str(path) for path in files)
    _print_meta(summary)
    failed = [record for record in run.records if record.error is not None]
    for record in failed:
        print(f"error: {record.pair_id}: {record.error}", file=sys.stderr)
    return 2 if failed else 0


def _cmd_stats(args: argparse.Namespace) -> int:
    pairs = load_corpus(args.corpus)
    config = _merge_config(args)
    groups: dict[str, list[AmrTree]] = {"rot": [], "sst": []}
    errors: list[str] = []
    for pair in pairs:
        for group, doc in (("rot", pair.rot), ("sst", pair.sst)):
            try:
                tree = build_document_tree(doc)
                enumerate_merge_trees(tree, config)
                groups[group].append(tree)
            except AmrReasonerError as error:
                errors.append(f"{pair.pair_id}.{group}: {type(error).__name__}: {error}")
    stats = {
        group: dataset_stats(trees, config) for group, trees in groups.items() if trees
    }
    meta: dict[str, object] = {
        "command": "stats",
        "corpus": args.corpus,
        "out_dir": args.out_dir,
        **_merge_meta(config),
        "pairs": len(pairs),
        "skipped_documents": len(errors),
    }
    rows = [
        (group, name, summary.mean, summary.median, summary.std)
        for group in sorted(stats)
        for name, summary in stats[group].items()
    ]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    columns = ("group", "stat", "mean", "median", "std")
    files = [
        write_delimited(out_dir / "stats.tsv", meta, columns, rows),
        render_stats_figure(stats, out_dir / "stats.png"),
    ]
    _print_meta({**meta, "files": ",".join(str(path) for path in files)})
    print("\t".join(columns))
    for row in rows:
        print("\t".join(format_cell(cell) for cell in row))
    for line in errors:
        print(f"error: {line}", file=sys.stderr)
    return 2 if errors else 0


# -- parser wiring ----------------------------------------------------------------


def _add_prover_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--threshold",
        type=float,
        default=_PROVER_DEFAULTS.similarity_threshold,
        help="similarity a unification must strictly exceed",
    )
    parser.add_argument(
        "--max-depth",
        type=int,
        default=_PROVER_DEFAULTS.max_proof_depth,
        help="maximum resolution steps on one proof path",
    )
    parser.add_argument(
        "--max-resolvent-width",
        type=int,
        default=_PROVER_DEFAULTS.max_resolvent_width,
        help="maximum literals kept in an intermediate resolvent",
    )


def _add_merge_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-width",
        type=int,
        default=_MERGE_DEFAULTS.max_merge_width,
        help="most embedded nodes a single merge may swallow",
    )
    parser.add_argument(
        "--min-depth",
        type=int,
        default=_MERGE_DEFAULTS.min_merge_depth,
        help="minimum depth of a merge target",
    )
    parser.add_argument(
        "--strict-min-depth",
        action="store_true",
        help="require depth strictly greater than --min-depth",
    )
    parser.add_argument(
        "--max-variants",
        type=int,
        default=_MERGE_DEFAULTS.max_variants,
        help="safety cap on enumerated merge combinations per tree",
    )


def _add_lexicon_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lexicon",
        default=None,
        help="path to a verdict lexicon JSON replacing the built-in one",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reasoner",
        description="Parse aligned AMR documents, merge subtrees, convert to logic, and prove rule/situation matches.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser("parse", help="normalize one document and print its tree")
    cmd.add_argument("document")
    cmd.set_defaults(handler=_cmd_parse)

    cmd = commands.add_parser("merge", help="enumerate merged variants of one document")
    cmd.add_argument("document")
    _add_merge_flags(cmd)
    cmd.set_defaults(handler=_cmd_merge)

    cmd = commands.add_parser("logic", help="print a document's logical form")
    cmd.add_argument("document")
    group = cmd.add_mutually_exclusive_group()
    group.add_argument("--as-rot", action="store_true", help="emit a rule implication")
    group.add_argument("--as-sst", action="store_true", help="emit ground situation facts")
    cmd.add_argument("--namespace", default=None, help="suffix for situation constants")
    _add_lexicon_flag(cmd)
    cmd.set_defaults(handler=_cmd_logic)

    cmd = commands.add_parser("prove", help="run the prover on a clause file")
    cmd.add_argument("clauses")
    cmd.add_argument("--goal", required=True, help="goal literal, e.g. 'GOOD(Q)'")
    _add_prover_flags(cmd)
    cmd.set_defaults(handler=_cmd_prove)

    cmd = commands.add_parser("match", help="match a rule document against a situation document")
    cmd.add_argument("rot")
    cmd.add_argument("sst")
    _add_prover_flags(cmd)
    _add_merge_flags(cmd)
    _add_lexicon_flag(cmd)
    cmd.add_argument("--all-verdicts", action="store_true", help="query every verdict, not just the rule's own")
    cmd.set_defaults(handler=_cmd_match)

    cmd = commands.add_parser("eval", help="evaluate a corpus of rule/situation pairs")
    cmd.add_argument("corpus")
    cmd.add_argument("--out-dir", default=".", help="directory for reports and figures")
    cmd.add_argument("--seed", type=int, default=0, help="negative-sampling seed")
    _add_prover_flags(cmd)
    _add_merge_flags(cmd)
    _add_lexicon_flag(cmd)
    cmd.add_argument("--all-verdicts", action="store_true", help="query every verdict, not just the rule's own")
    cmd.add_argument("--sweep", default=None, help="axis=lo:hi:step, axis in {threshold, max-width}")
    cmd.add_argument("--buckets", default=None, help="comma-separated collapsability boundaries, e.g. 0,0.2,0.5,1")
    cmd.set_defaults(handler=_cmd_eval)

    cmd = commands.add_parser("stats", help="corpus size statistics")
    cmd.add_argument("corpus")
    cmd.add_argument("--out-dir", default=".", help="directory for reports and figures")
    _add_merge_flags(cmd)
    cmd.set_defaults(handler=_cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except AmrReasonerError as error:
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as error:
        print(f"fatal: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
