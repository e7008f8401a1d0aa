from typing import Literal
from pydantic import BaseModel, Field
from src.config.analysis_config import AnalysisConfig, parse_config
from src.core.analysis.report import Report, render_machine, render_text
from src.core.syntax.ast import Program
from src.core.syntax.parser import parse_program

class AnalysisRequest(BaseModel):
    programs: list[str] = Field(min_length=1, max_length=2, description="CHR program texts")
    config: str | None = Field(default=None, description="Analysis config text (.cfg)")
    format: Literal["text", "machine"] | None = None

    def parsed_programs(self) -> list[Program]:
        return [parse_program(text) for text in self.programs]

    def parsed_config(self) -> AnalysisConfig:
        return parse_config(self.config) if self.config is not None else AnalysisConfig()

class AnalysisResponse(BaseModel):
    exit_code: int
    established: bool
    report: list[str]

def respond(report: Report, code: int, fmt: str) -> AnalysisResponse:
    rendered = render_machine(report) if fmt == "machine" else render_text(report)
    return AnalysisResponse(exit_code=code, established=report.established, report=rendered.splitlines())
