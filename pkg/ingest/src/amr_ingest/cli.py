"""Command-line entry point for the ingest batch pipeline."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import AmrIngestError
from .pipeline import IngestJob, ingest, read_input_table


def _build_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amr-ingest",
        description=(
            "Convert a tab-separated table of (id, rule text, situation text) "
            "into aligned AMR document files, one JSON file per text."
        ),
    )
    parser.add_argument("input", type=Path, help="tab-separated pair table")
    parser.add_argument(
        "--out-dir", type=Path, required=True, help="directory for emitted documents"
    )
    parser.add_argument(
        "--parser-model",
        default="rule-based",
        help="'rule-based' or a pretrained sequence-to-graph model directory",
    )
    parser.add_argument(
        "--embedding-model",
        default="hash:16",
        help="'hash[:dim]', 'tiny-random[:seed]', or a pretrained model identifier",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    arguments = _build_argument_parser().parse_args(argv)
    try:
        rows = read_input_table(arguments.input)
        job = IngestJob(
            inputs=rows,
            parser_model=arguments.parser_model,
            embedding_model=arguments.embedding_model,
            out_dir=arguments.out_dir,
        )
        report = ingest(job)
    except OSError as error:
        print(f"fatal: {error}", file=sys.stderr)
        return 1
    except AmrIngestError as error:
        print(f"fatal: {error}", file=sys.stderr)
        return 1
    for failure in report.failures:
        print(
            f"error: {failure.row_id} {failure.side}: {failure.kind}: {failure.message}",
            file=sys.stderr,
        )
    print(f"# input={arguments.input}")
    print(f"# out_dir={arguments.out_dir}")
    print(f"# parser_model={arguments.parser_model}")
    print(f"# embedding_model={arguments.embedding_model}")
    print(f"# rows={len(rows)}")
    print(f"# written={len(report.written)}")
    print(f"# failed={len(report.failures)}")
    print(f"# dim={report.dim if report.dim is not None else 'undefined'}")
    return 2 if report.failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
