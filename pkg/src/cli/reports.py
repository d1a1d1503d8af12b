"""
Report assembly, provenance hashing and rendering.

A run produces one Report. The JSON format is the pydantic dump of it; the
text format is a tabulate rendering of the same object.
"""

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from tabulate import tabulate

from src.utils.validation import Provenance, Report, Verdict

VerdictTuple = Tuple[str, bool, Dict[str, Any]]


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def sha256_payload(payload: Any) -> str:
    """Digest of the canonical JSON of an inline argument."""
    return sha256_text(canonical_json(payload))


def sha256_file(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def make_verdicts(items: Iterable[VerdictTuple]) -> List[Verdict]:
    return [Verdict(name=name, passed=bool(passed), detail=detail) for name, passed, detail in items]


def build_report(
    command: str,
    verdicts: Iterable[VerdictTuple],
    results: Dict[str, Any],
    *,
    arguments: Optional[Dict[str, Any]] = None,
    inputs: Optional[Dict[str, str]] = None,
    seed: Optional[int] = None,
    bounds: Optional[Dict[str, int]] = None,
) -> Report:
    provenance = Provenance(
        command=command,
        arguments=arguments or {},
        inputs=inputs or {},
        seed=seed,
        bounds=bounds or {},
    )
    return Report(
        command=command,
        verdicts=make_verdicts(verdicts),
        results=results,
        provenance=provenance,
    )


def error_report(command: str, error: Exception, arguments: Optional[Dict[str, Any]] = None) -> Report:
    """A report with one failed verdict naming the error."""
    detail = error.to_dict() if hasattr(error, "to_dict") else {"message": str(error)}
    return build_report(
        command,
        [(type(error).__name__, False, detail)],
        {},
        arguments=arguments,
    )


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2)


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return canonical_json(value)
    return str(value)


def render_text(report: Report) -> str:
    lines = [f"=== hrs-tilt {report.command} ==="]

    rows = [
        [v.name, "✅" if v.passed else "❌", _cell(v.detail) if v.detail else ""]
        for v in report.verdicts
    ]
    if rows:
        lines.append(tabulate(rows, headers=["Check", "Passed", "Detail"], tablefmt="grid"))

    if report.results:
        lines.append("")
        lines.append("Results:")
        lines.append(
            tabulate(
                [[key, _cell(value)] for key, value in report.results.items()],
                headers=["Key", "Value"],
                tablefmt="grid",
            )
        )

    provenance = report.provenance
    lines.append("")
    lines.append(f"Tool version: {provenance.tool_version}")
    if provenance.seed is not None:
        lines.append(f"Seed: {provenance.seed}")
    for label, value in provenance.bounds.items():
        lines.append(f"Bound {label}: {value}")
    for label, digest in provenance.inputs.items():
        lines.append(f"Input {label}: sha256 {digest}")
    lines.append(f"Overall: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def write_report(report: Report, fmt: str, out: Optional[Union[str, Path]] = None) -> str:
    """
    Render the report and write it to ``out``, or return it for stdout.

    Returns:
        The rendered text
    """
    text = render_json(report) if fmt == "json" else render_text(report)
    if out is not None:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
    return text
