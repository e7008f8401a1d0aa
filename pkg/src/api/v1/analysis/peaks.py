from fastapi import APIRouter
from src.api.v1.analysis.schema import AnalysisRequest, AnalysisResponse, respond
from src.core.jobs.peaks import list_peaks

router = APIRouter(prefix="/analysis", tags=["analysis"])

@router.post("/peaks", response_model=AnalysisResponse)
def post_peaks(request: AnalysisRequest):
    config = request.parsed_config()
    report = list_peaks(request.parsed_programs(), config)
    return respond(report, 0, request.format or config.format or "machine")
