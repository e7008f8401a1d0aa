from fastapi import FastAPI, Request, status
from fastapi.responses import JSONResponse
from src.api.v1.analysis.check import router as check_router
from src.api.v1.analysis.peaks import router as peaks_router
from src.core.errors import ChrdcError

app = FastAPI(title="chrdc", description="Confluence analysis for Constraint Handling Rules programs")
app.include_router(peaks_router)
app.include_router(check_router)

@app.exception_handler(ChrdcError)
async def analysis_exception_handler(request: Request, e: ChrdcError):
    return JSONResponse(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, content={e.__class__.__name__: str(e)})

@app.exception_handler(Exception)
async def default_exception_handler(request: Request, e: Exception):
    return JSONResponse(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, content={e.__class__.__name__: str(e)})

@app.get("/")
def read_root():
    return {
        "app": "chrdc",
        "endpoints": {
            "status": 200,
            "Documentation": "/docs",
            "Analysis": {
                "List critical peaks": "POST /analysis/peaks",
                "Check a confluence criterion": "POST /analysis/check"
            }
        }
    }
