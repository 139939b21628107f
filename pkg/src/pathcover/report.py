"""Deterministic result serialization (JSON and CSV).

Records follow a fixed schema; two runs of the same computation serialize
byte-identically apart from the ``stats`` fields.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .claims import DiscrepancyReport
from .graph import Graph
from .solve import Bounds, SolveResult

SCHEMA_VERSION = 1

_EMPTY_BOUNDS = {
    "domination_lb": None,
    "degree_lb": None,
    "clique_lb": None,
    "trivial_ub": None,
    "order_diameter_ub": None,
    "diameter_ub": None,
    "half_ub": None,
}

CSV_COLUMNS = (
    "schema_version", "family", "params", "n", "m", "variant", "k",
    "optimum", "set",
    "domination_lb", "degree_lb", "clique_lb", "trivial_ub",
    "order_diameter_ub", "diameter_ub", "half_ub",
    "claim_status", "nodes", "elapsed_s",
)


def result_record(
    graph: Graph,
    result: SolveResult | None,
    family: str | None = None,
    params: tuple[int, ...] | None = None,
    bounds: Bounds | None = None,
    claim_status: str | None = None,
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "graph": {
            "family": family,
            "params": list(params) if params is not None else None,
            "n": graph.n,
            "m": graph.m,
        },
        "variant": result.variant if result else None,
        "k": result.k if result else None,
        "optimum": result.optimum if result else None,
        "set": list(result.set) if result else None,
        "bounds": bounds.as_dict() if bounds else None,
        "claim_status": claim_status,
        "stats": {
            "nodes": result.stats.nodes,
            "elapsed_s": result.stats.elapsed_s,
        } if result else None,
    }


def claim_record(report: DiscrepancyReport) -> dict:
    """Result record for one claim-sweep instance."""
    return {
        "schema_version": SCHEMA_VERSION,
        "graph": {
            "family": report.claim.family,
            "params": list(report.params),
            "n": report.n,
            "m": report.m,
        },
        "variant": report.claim.variant,
        "k": report.claim.k,
        "optimum": report.computed,
        "set": None,
        "bounds": None,
        "claim_status": report.status,
        "stats": None,
    }


def to_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _flat_row(record: dict) -> dict:
    graph = record.get("graph") or {}
    bounds = record.get("bounds") or _EMPTY_BOUNDS
    stats = record.get("stats") or {}
    params = graph.get("params")
    vset = record.get("set")
    return {
        "schema_version": record.get("schema_version"),
        "family": graph.get("family"),
        "params": " ".join(str(p) for p in params) if params else "",
        "n": graph.get("n"),
        "m": graph.get("m"),
        "variant": record.get("variant"),
        "k": record.get("k"),
        "optimum": record.get("optimum"),
        "set": " ".join(str(v) for v in vset) if vset else "",
        "domination_lb": bounds.get("domination_lb"),
        "degree_lb": bounds.get("degree_lb"),
        "clique_lb": bounds.get("clique_lb"),
        "trivial_ub": bounds.get("trivial_ub"),
        "order_diameter_ub": bounds.get("order_diameter_ub"),
        "diameter_ub": bounds.get("diameter_ub"),
        "half_ub": bounds.get("half_ub"),
        "claim_status": record.get("claim_status"),
        "nodes": stats.get("nodes"),
        "elapsed_s": stats.get("elapsed_s"),
    }


def to_csv(records: Iterable[dict]) -> str:
    """CSV with one row per record; header is emitted even when empty."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(_flat_row(record))
    return buf.getvalue()
