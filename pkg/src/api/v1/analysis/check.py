from typing import Literal
from fastapi import APIRouter
from src.api.v1.analysis.schema import AnalysisRequest, AnalysisResponse, respond
from src.core.jobs.check import check, exit_code

router = APIRouter(prefix="/analysis", tags=["analysis"])

class CheckRequest(AnalysisRequest):
    mode: Literal["local", "strong", "decreasing", "modular"] = "decreasing"
    max_depth: int | None = None
    max_states: int | None = None

@router.post("/check", response_model=AnalysisResponse)
def post_check(request: CheckRequest):
    config = request.parsed_config()
    report = check(request.mode, request.parsed_programs(), config, request.max_depth, request.max_states)
    return respond(report, exit_code(report), request.format or config.format or "machine")
