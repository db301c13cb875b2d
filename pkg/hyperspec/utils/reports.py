"""
JSON and CSV serialization of verification reports
"""
import csv
import io
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from hyperspec.schemas import ExtremalReport
from hyperspec.utils.formats import dump_json, format_float

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["m", "k", "param", "alpha", "class_size", "champion_rho", "gap", "unique"]

SCOPE_NOTE = (
    "Only the listed alpha values and (m, k) scales were checked numerically. "
    "The extremal statements cover every alpha in [0, 1) and every m; "
    "settings outside this report are not certified by it."
)


def csv_row(report: ExtremalReport) -> Dict[str, object]:
    return {
        "m": report.m,
        "k": report.k,
        "param": report.param_label(),
        "alpha": format_float(report.alpha),
        "class_size": report.class_size,
        "champion_rho": format_float(report.champion.rho),
        "gap": "" if report.gap is None else format_float(report.gap),
        "unique": "true" if report.unique else "false",
    }


def render_csv(reports: Sequence[ExtremalReport]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        writer.writerow(csv_row(report))
    return buffer.getvalue()


def report_document(reports: Sequence[ExtremalReport]) -> Dict[str, object]:
    return {
        "scope": SCOPE_NOTE,
        "all_unique": all(report.unique for report in reports),
        "reports": [report.model_dump(mode="json") for report in reports],
    }


def render_json(reports: Sequence[ExtremalReport]) -> str:
    return dump_json(report_document(reports)) + "\n"


def falsified(reports: Sequence[ExtremalReport]) -> List[ExtremalReport]:
    return [report for report in reports if not report.unique]


def write_reports(reports: Sequence[ExtremalReport], json_path: Path, csv_path: Path,
                  counterexample_path: Optional[Path] = None) -> None:
    """Write the JSON document and the CSV summary; falsified rows also go to their own file."""
    json_path.parent.mkdir(parents=True, exist_ok=True)
    json_path.write_text(render_json(reports), encoding="utf-8")
    csv_path.write_text(render_csv(reports), encoding="utf-8")
    logger.info(f"wrote {len(reports)} report rows to {json_path} and {csv_path}")

    bad = falsified(reports)
    if bad and counterexample_path is not None:
        counterexample_path.write_text(render_json(bad), encoding="utf-8")
        logger.warning(f"{len(bad)} falsified row(s) written to {counterexample_path}")
