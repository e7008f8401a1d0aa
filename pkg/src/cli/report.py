# text and machine renderings written to stdout

import click
from src.core.analysis.report import Record, Report, render_machine, render_text
from src.core.engine.step import Derivation
from src.core.state.state import pretty_state

def emit_report(report: Report, fmt: str = "text") -> None:
    click.echo(render_machine(report) if fmt == "machine" else render_text(report), nl=False)

def render_trace(derivation: Derivation, fmt: str = "text") -> str:
    if fmt == "machine":
        lines = [str(Record("STEP", (str(i), step.rule_name),
                            (("kept", tuple(map(str, step.matched_kept))),
                             ("removed", tuple(map(str, step.matched_removed))))))
                 for i, step in enumerate(derivation.steps, start=1)]
        end = "fixpoint" if derivation.fixpoint else "step_limit"
        lines.append(str(Record("TRACE", (str(len(derivation)),), (("end", end),))))
    else:
        lines = [f"0: {pretty_state(derivation.source)}"]
        lines += [f"{i}: [{step.rule_name}] {pretty_state(step.target)}"
                  for i, step in enumerate(derivation.steps, start=1)]
        lines.append(f"{'fixpoint' if derivation.fixpoint else 'step limit'} after {len(derivation)} steps")
    return "\n".join(lines) + "\n"

def emit_trace(derivation: Derivation, fmt: str = "text") -> None:
    click.echo(render_trace(derivation, fmt), nl=False)
