"""Batch conversion of rule/situation text pairs into aligned document files.

The input is a tab-separated table with one pair per line: identifier,
rule-of-thumb text, situation text. Each text becomes one JSON document
holding the parsed Penman graph, the token list, node-path alignments,
and one embedding row per token — the on-disk format the downstream
reasoner loads. Parser and embedding failures are recorded per identifier
and the batch keeps going; the embedding dimension is constant across a
job because one embedder instance serves every row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .embedding import build_embedder
from .errors import EmbeddingFailure, MalformedInput, ParserFailure
from .parsing import build_parser

_SIDES = ("rot", "sst")


@dataclass(frozen=True)
class InputRow:
    """One table line: a pair identifier and its two texts."""

    row_id: str
    rot: str
    sst: str


@dataclass(frozen=True)
class IngestJob:
    inputs: tuple[InputRow, ...]
    parser_model: str = "rule-based"
    embedding_model: str = "hash:16"
    out_dir: Path = Path(".")


@dataclass(frozen=True)
class Failure:
    """Why one side of one pair produced no file."""

    row_id: str
    side: str
    kind: str
    message: str


@dataclass
class IngestReport:
    written: list[Path] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)
    dim: int | None = None


def read_input_table(path: Path) -> tuple[InputRow, ...]:
    """Parse the tab-separated pair table; ``#`` lines and blanks are skipped."""
    rows: list[InputRow] = []
    seen: set[str] = set()
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 3:
            raise MalformedInput(
                f"{path.name} line {number}: expected 3 tab-separated columns, got {len(columns)}"
            )
        row_id = columns[0].strip()
        if not row_id:
            raise MalformedInput(f"{path.name} line {number}: empty identifier")
        if row_id in seen:
            raise MalformedInput(f"{path.name} line {number}: duplicate identifier {row_id!r}")
        seen.add(row_id)
        rows.append(InputRow(row_id=row_id, rot=columns[1].strip(), sst=columns[2].strip()))
    return tuple(rows)


def ingest(job: IngestJob) -> IngestReport:
    """Run the whole table; every failure is recorded, none stops the batch."""
    parser = build_parser(job.parser_model)
    embedder = build_embedder(job.embedding_model)
    report = IngestReport()
    job.out_dir.mkdir(parents=True, exist_ok=True)
    for row in job.inputs:
        for side in _SIDES:
            text = row.rot if side == "rot" else row.sst
            try:
                path = _write_document(parser, embedder, row.row_id, side, text, job, report)
            except ParserFailure as error:
                report.failures.append(Failure(row.row_id, side, "parser", str(error)))
            except EmbeddingFailure as error:
                report.failures.append(Failure(row.row_id, side, "embedding", str(error)))
            else:
                report.written.append(path)
    return report


def _write_document(parser, embedder, row_id, side, text, job, report) -> Path:
    result = parser.parse(text)
    rows = embedder.embed(result.tokens)
    if rows.shape[0] != len(result.tokens):
        raise EmbeddingFailure(
            f"embedder returned {rows.shape[0]} rows for {len(result.tokens)} tokens"
        )
    if report.dim is None:
        report.dim = int(rows.shape[1])
    elif int(rows.shape[1]) != report.dim:
        raise EmbeddingFailure(
            f"embedding dimension changed from {report.dim} to {rows.shape[1]} mid-job"
        )
    payload = {
        "id": f"{row_id}-{side}",
        "text": text,
        "penman": result.penman,
        "tokens": list(result.tokens),
        "node_alignments": {
            path: list(indices) for path, indices in result.alignments.items()
        },
        "token_embeddings": [[float(value) for value in row] for row in rows],
    }
    path = job.out_dir / f"{row_id}.{side}.json"
    with path.open("w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=1)
        handle.write("\n")
    return path
