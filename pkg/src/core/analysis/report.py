# analysis reports and their two renderings

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from src.core.analysis.verdict import PeakStatus, PeakVerdict
from src.core.errors import ChrdcError
from src.core.orders.partition import Partition
from src.core.orders.preorder import Admissibility, RulePreorder
from src.core.orders.termination import TerminationResult
from src.core.peaks.peak import CriticalPeak, pretty_peak
from src.core.state.state import display_names, pretty_state
from src.core.syntax.pretty import pretty


class Criterion(Enum):
    PEAKS = "critical_peaks"
    LOCAL = "local_confluence"
    STRONG = "strong_confluence"
    DECREASING = "rule_decreasing"
    MODULAR = "modular_union_confluent"


class Outcome(Enum):
    CONFLUENT = "CONFLUENT"
    NOT_ESTABLISHED = "NOT_ESTABLISHED"
    LISTED = "LISTED"


@dataclass(frozen=True)
class Report:
    criterion: Criterion
    outcome: Outcome
    verdicts: tuple[PeakVerdict, ...] = ()
    peaks: tuple[CriticalPeak, ...] = ()
    trivial_peaks: int = 0
    termination: TerminationResult | None = None
    admissibility: Admissibility | None = None
    order: RulePreorder | None = None
    partition: Partition | None = None
    assumptions: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    orders_tried: int = 0
    strongly: bool = False

    @property
    def established(self) -> bool:
        return self.outcome is not Outcome.NOT_ESTABLISHED

    @property
    def verdict_name(self) -> str:
        return "strongly_rule_decreasing" if self.strongly else self.criterion.value

    @property
    def all_peaks(self) -> tuple[CriticalPeak, ...]:
        return self.peaks or tuple(v.peak for v in self.verdicts)


class MachineReportError(ChrdcError):
    pass


@dataclass(frozen=True)
class Record:
    """One machine-report line: `KIND arg… key=value…`, values are tokens or `[a,b]` lists."""

    kind: str
    args: tuple[str, ...] = ()
    fields: tuple[tuple[str, str | tuple[str, ...]], ...] = field(default=())

    def get(self, key: str, default=None):
        for k, v in self.fields:
            if k == key:
                return v
        return default

    def __str__(self) -> str:
        parts = [self.kind, *self.args]
        for k, v in self.fields:
            parts.append(f"{k}=[{','.join(v)}]" if isinstance(v, tuple) else f"{k}={v}")
        return " ".join(parts)


def parse_record(line: str) -> Record:
    tokens = line.split()
    if not tokens or not tokens[0].isupper():
        raise MachineReportError(f"not a report record: {line!r}")
    args, fields = [], []
    for tok in tokens[1:]:
        key, eq, value = tok.partition("=")
        if not eq or not key.isidentifier():
            if fields:
                raise MachineReportError(f"positional field after key=value in {line!r}")
            args.append(tok)
        elif value.startswith("[") and value.endswith("]"):
            inner = value[1:-1]
            fields.append((key, tuple(inner.split(",")) if inner else ()))
        else:
            fields.append((key, value))
    return Record(tokens[0], tuple(args), tuple(fields))


def parse_machine_report(text: str) -> list[Record]:
    return [parse_record(line) for line in text.splitlines() if line.strip()]


def _token(note: str) -> str:
    return note.replace(" ", "_")


def _termination_record(t: TerminationResult) -> Record:
    fields: list = [("measure", t.measure)]
    if t.witness:
        fields.append(("witness", t.witness))
    if t.unverified:
        fields.append(("unverified", tuple(t.unverified)))
    if t.limitations:
        fields.append(("limitations", tuple(t.limitations)))
    return Record("TERMINATION", (t.scope, t.status.value), tuple(fields))


def _admissible_record(report: Report) -> Record:
    a = report.admissibility
    fields: list = []
    if a.witness:
        fields.append(("witness", a.witness))
    if report.order is not None:
        fields.append(("order", tuple(report.order.pairs())))
    if report.orders_tried:
        fields.append(("orders_tried", str(report.orders_tried)))
    return Record("ADMISSIBLE", ("YES" if a.ok else "NO",), tuple(fields))


def _verdict_record(v: PeakVerdict) -> Record:
    pk = v.peak
    fields: list = []
    if v.certificate is not None:
        fields.append(("left", v.certificate.left_closing.labels))
        fields.append(("right", v.certificate.right_closing.labels))
    fields.append(("kind", pk.kind.value))
    if v.via_tactic:
        fields.append(("tactic", pk.selector))
    if v.status is PeakStatus.NOT_CLOSED and v.budget is not None:
        fields.append(("depth", str(v.budget.max_depth)))
        fields.append(("states", str(v.budget.max_states)))
    if v.notes:
        fields.append(("notes", tuple(_token(n) for n in v.notes)))
    return Record("PEAK", (str(pk.index), pk.left_rule, pk.right_rule, v.status.value), tuple(fields))


def _listing_record(pk: CriticalPeak) -> Record:
    return Record("PEAK", (str(pk.index), pk.left_rule, pk.right_rule, "CRITICAL"),
                  (("kind", pk.kind.value), ("selector", pk.selector)))


def machine_records(report: Report) -> list[Record]:
    records: list[Record] = []
    if report.termination is not None:
        records.append(_termination_record(report.termination))
    if report.admissibility is not None:
        records.append(_admissible_record(report))
    if report.criterion is Criterion.PEAKS:
        records.extend(_listing_record(pk) for pk in report.peaks)
    else:
        records.extend(_verdict_record(v) for v in report.verdicts)
    fields: list = [("assumptions", tuple(report.assumptions))]
    if report.criterion is Criterion.PEAKS:
        fields.append(("count", str(len(report.peaks))))
    fields.append(("trivial", str(report.trivial_peaks)))
    if report.notes:
        fields.append(("notes", tuple(_token(n) for n in report.notes)))
    records.append(Record("VERDICT", (report.verdict_name, report.outcome.value), tuple(fields)))
    return records


def render_machine(report: Report) -> str:
    return "".join(f"{r}\n" for r in machine_records(report))


def _render_verdict(v: PeakVerdict) -> list[str]:
    lines = pretty_peak(v.peak).splitlines()
    lines.append(f"  status: {v.status.value}" + (" (tactic)" if v.via_tactic else ""))
    if v.certificate is not None:
        cert = v.certificate
        names = display_names(v.peak.ancestor, v.peak.left, v.peak.right, cert.meet[0])
        lines.append(f"  left closing:  {', '.join(cert.left_closing.labels) or '(empty)'}")
        lines.append(f"  right closing: {', '.join(cert.right_closing.labels) or '(empty)'}")
        lines.append(f"  meet: {pretty_state(cert.meet[0], names)}")
    if v.status is PeakStatus.NOT_CLOSED and v.budget is not None:
        lines.append(f"  no valley within depth {v.budget.max_depth} and {v.budget.max_states} states")
    lines.extend(f"  note: {n}" for n in v.notes)
    return lines


def render_text(report: Report) -> str:
    lines = [f"criterion: {report.verdict_name}"]
    if report.partition is not None:
        lines.append(f"inductive: {', '.join(sorted(report.partition.inductive)) or '(none)'}")
        lines.append(f"coinductive: {', '.join(sorted(report.partition.coinductive)) or '(none)'}")
    if report.termination is not None:
        t = report.termination
        detail = f" (witness {t.witness})" if t.witness else ""
        if t.limitations:
            detail += f" (limitations: {', '.join(t.limitations)})"
        lines.append(f"termination of the {t.scope} part: {t.status.value} by {t.measure}{detail}")
    if report.admissibility is not None:
        a = report.admissibility
        shown = ", ".join(report.order.pairs()) if report.order is not None else ""
        status = "admissible" if a.ok else f"not admissible ({a.witness[0]} is not above {a.witness[1]})"
        lines.append(f"order: {shown or '(empty)'} - {status}")
        if report.orders_tried:
            lines.append(f"orders tried: {report.orders_tried}")
    lines.append("")
    if report.criterion is Criterion.PEAKS:
        for pk in report.peaks:
            lines.extend(pretty_peak(pk).splitlines())
            lines.append("")
    else:
        for v in report.verdicts:
            lines.extend(_render_verdict(v))
            lines.append("")
    summary = f"verdict: {report.outcome.value}"
    if report.criterion is Criterion.PEAKS:
        summary += f" ({len(report.peaks)} peaks"
    else:
        summary += f" ({len(report.verdicts)} peaks"
    summary += f", {report.trivial_peaks} trivial skipped)"
    lines.append(summary)
    lines.append(f"assumptions: {', '.join(report.assumptions) or 'none'}")
    lines.extend(f"note: {n}" for n in report.notes)
    return "\n".join(lines) + "\n"


pretty.register(Report, render_text)
