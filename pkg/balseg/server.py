"""
balseg Server
FastAPI JSON-RPC 2.0 endpoint over the same tools as the command line
"""
import json
import logging
from datetime import datetime, timezone
from typing import Any, Dict, Optional, Union

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ValidationError

from . import __version__
from .checks import check_registry
from .errors import InvalidArgumentError
from .tools.tool_registry import tool_registry

logger = logging.getLogger(__name__)

INVALID_REQUEST = -32600
METHOD_NOT_FOUND = -32601
INVALID_PARAMS = -32602
INTERNAL_ERROR = -32603
PARSE_ERROR = -32700

app = FastAPI(
    title="balseg Server",
    description="Balanced words: counts, enumeration, generating functions - JSON-RPC 2.0",
    version=__version__,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# ============================================
# Pydantic Models
# ============================================

class JsonRpcRequest(BaseModel):
    jsonrpc: str = "2.0"
    id: Union[int, str, None] = None
    method: str
    params: Optional[Dict[str, Any]] = None


# ============================================
# JSON-RPC Method Handlers
# ============================================

def _text_content(payload: Dict[str, Any]) -> Dict[str, Any]:
    return {"content": [{"type": "text", "text": json.dumps(payload)}]}


def handle_initialize(params: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("🔌 Client initializing connection")
    return {
        "protocolVersion": "2024-11-05",
        "capabilities": {"tools": {}},
        "serverInfo": {"name": "balseg", "version": __version__},
    }


def handle_tools_list(params: Dict[str, Any]) -> Dict[str, Any]:
    tools = tool_registry.list_tools()
    logger.info(f"📋 Listed {len(tools)} available tools")
    return {"tools": tools}


def handle_tools_call(params: Dict[str, Any]) -> Dict[str, Any]:
    tool_name = params.get("name")
    arguments = params.get("arguments") or {}
    logger.info(f"🔧 Calling tool: {tool_name} with params: {arguments}")
    if not tool_registry.has_tool(tool_name):
        raise InvalidArgumentError(f"Tool '{tool_name}' not found")
    return _text_content(tool_registry.execute_tool(tool_name, arguments))


def handle_checks_list(params: Dict[str, Any]) -> Dict[str, Any]:
    checks = check_registry.list_checks()
    logger.info(f"📋 Listed {len(checks)} verification suites")
    return {"checks": checks}


def handle_checks_call(params: Dict[str, Any]) -> Dict[str, Any]:
    name = params.get("name")
    arguments = params.get("arguments") or {}
    logger.info(f"✨ Running check: {name} with params: {arguments}")
    if not check_registry.has_check(name):
        raise InvalidArgumentError(f"Check '{name}' not found")
    return _text_content(check_registry.get(name).execute(arguments))


JSONRPC_METHODS = {
    "initialize": handle_initialize,
    "tools/list": handle_tools_list,
    "tools/call": handle_tools_call,
    "checks/list": handle_checks_list,
    "checks/call": handle_checks_call,
}


def _error(request_id: Any, code: int, message: str, data: Optional[str] = None,
           status_code: int = 200) -> JSONResponse:
    error: Dict[str, Any] = {"code": code, "message": message}
    if data is not None:
        error["data"] = data
    return JSONResponse(status_code=status_code,
                        content={"jsonrpc": "2.0", "id": request_id, "error": error})


# ============================================
# Endpoints
# ============================================

@app.post("/")
async def jsonrpc_handler(request: Request):
    """Main JSON-RPC 2.0 endpoint"""
    try:
        body = await request.json()
    except ValueError as e:
        logger.error(f"❌ Request processing error: {str(e)}")
        return _error(None, PARSE_ERROR, "Parse error", str(e), status_code=400)

    if not isinstance(body, dict) or body.get("jsonrpc") != "2.0" or not isinstance(body.get("method"), str):
        request_id = body.get("id") if isinstance(body, dict) else None
        return _error(request_id, INVALID_REQUEST, "Invalid Request - jsonrpc must be '2.0' with a method",
                      status_code=400)

    try:
        rpc = JsonRpcRequest.model_validate(body)
    except ValidationError as e:
        return _error(body.get("id"), INVALID_REQUEST, "Invalid Request", str(e), status_code=400)
    logger.info(f"📨 JSON-RPC Request: method={rpc.method}, id={rpc.id}")

    if rpc.method not in JSONRPC_METHODS:
        return _error(rpc.id, METHOD_NOT_FOUND, f"Method not found: {rpc.method}")

    try:
        result = JSONRPC_METHODS[rpc.method](rpc.params or {})
    except InvalidArgumentError as e:
        logger.error(f"❌ Invalid params: {str(e)}")
        return _error(rpc.id, INVALID_PARAMS, "Invalid params", str(e))
    except Exception as e:
        logger.error(f"❌ Method execution error: {str(e)}")
        return _error(rpc.id, INTERNAL_ERROR, "Internal error", str(e))

    logger.info(f"✅ JSON-RPC Response: id={rpc.id}, success=True")
    return JSONResponse(content={"jsonrpc": "2.0", "id": rpc.id, "result": result})


@app.get("/health")
async def health_check():
    return {
        "status": "healthy",
        "version": __version__,
        "server": "balseg",
        "protocol": "JSON-RPC 2.0",
        "tools_count": tool_registry.get_tool_count(),
        "tools": [tool["name"] for tool in tool_registry.list_tools()],
        "checks_count": check_registry.get_check_count(),
        "checks": [check["name"] for check in check_registry.list_checks()],
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


@app.get("/")
async def root():
    return {
        "name": "balseg Server",
        "version": __version__,
        "protocol": "JSON-RPC 2.0 over HTTP",
        "endpoints": {
            "jsonrpc": "POST /",
            "health": "GET /health",
            "docs": "GET /docs",
        },
        "tools": [tool["name"] for tool in tool_registry.list_tools()],
        "checks": [check["name"] for check in check_registry.list_checks()],
    }


def log_startup(host: str, port: int) -> None:
    logger.info("=" * 70)
    logger.info("🚀 Starting balseg Server")
    logger.info("=" * 70)
    logger.info(f"📍 Host: {host}")
    logger.info(f"🔌 Port: {port}")
    logger.info(f"🛠️  Tools: {[tool['name'] for tool in tool_registry.list_tools()]}")
    logger.info(f"🧪 Checks: {[check['name'] for check in check_registry.list_checks()]}")
    logger.info("=" * 70)
    logger.info(f"🌐 Server URL: http://{host}:{port}")
    logger.info(f"❤️  Health Check: http://{host}:{port}/health")
    logger.info(f"📚 API Docs: http://{host}:{port}/docs")
    logger.info("=" * 70)
