"""
Cofinite Injection Engine - FastAPI Main Application
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
import uvicorn
from loguru import logger

from routers import algebra, chains, congruences, green
from models.schemas import ErrorResponse
from utils.config import settings, validate_configuration
from utils.errors import AlgebraError, ValidationError
from utils.logging import configure_logging

# Initialize FastAPI app
app = FastAPI(
    title="Cofinite Injection Engine API",
    description="Exact computations in the inverse monoid of injective partial cofinite selfmaps of the naturals",
    version="1.0.0",
    docs_url="/docs",
    redoc_url="/redoc"
)

# Include routers
app.include_router(algebra.router, prefix="/api/v1", tags=["algebra"])
app.include_router(green.router, prefix="/api/v1", tags=["green"])
app.include_router(congruences.router, prefix="/api/v1", tags=["congruences"])
app.include_router(chains.router, prefix="/api/v1", tags=["chains"])


@app.on_event("startup")
async def startup_event():
    """Initialize application on startup"""
    configure_logging()
    validate_configuration()
    logger.info("Cofinite Injection Engine API starting up...")


@app.on_event("shutdown")
async def shutdown_event():
    """Cleanup on application shutdown"""
    logger.info("Cofinite Injection Engine API shutting down...")


@app.get("/")
async def root():
    """Root endpoint"""
    return {
        "message": "Cofinite Injection Engine API",
        "version": "1.0.0",
        "docs": "/docs",
        "status": "running"
    }


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "service": "cofinite-injection-engine"}


@app.exception_handler(AlgebraError)
async def algebra_exception_handler(request: Request, exc: AlgebraError):
    """Validation failures map to 400, unmet preconditions to 422"""
    status_code = 400 if isinstance(exc, ValidationError) else 422
    logger.warning(f"{exc.code} on {request.url.path}: {exc.message}")
    return JSONResponse(
        status_code=status_code,
        content=ErrorResponse(
            error=exc.code,
            message=exc.message,
            details={"exit_code": exc.exit_code}
        ).model_dump()
    )


@app.exception_handler(Exception)
async def global_exception_handler(request, exc):
    """Global exception handler"""
    logger.error(f"Unhandled exception: {exc}")
    return JSONResponse(
        status_code=500,
        content=ErrorResponse(
            error="Internal server error",
            message="An unexpected error occurred"
        ).model_dump()
    )


if __name__ == "__main__":
    uvicorn.run(
        "main:app",
        host=settings.api_host,
        port=settings.api_port,
        reload=True,
        log_level=settings.log_level.lower()
    )
