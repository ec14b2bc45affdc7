"""
FastAPI application for the lacunary service.

Sets up the application, the shared LacunaryEngine and the routes. Run with
uvicorn; the bind address comes from LACUNARY_HOST (default 0.0.0.0) and
LACUNARY_PORT (default 8000).
"""

import os

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from lacunary import __version__
from lacunary.api.routes import register_routes
from lacunary.core.engine import LacunaryEngine

# ============================================================================
# APPLICATION INITIALIZATION
# ============================================================================

app = FastAPI(title="Lacunary polynomials", version=__version__)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)

# One engine per process; its Stokes charts are shared across requests.
engine = LacunaryEngine()

register_routes(app, engine)

# ============================================================================
# SERVER STARTUP
# ============================================================================

if __name__ == "__main__":
    import uvicorn

    host = os.getenv("LACUNARY_HOST", "0.0.0.0")
    port = int(os.getenv("LACUNARY_PORT", 8000))
    uvicorn.run(app, host=host, port=port)
