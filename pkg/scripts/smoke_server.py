#!/usr/bin/env python3
"""
Connectivity smoke test against a running balseg server.
- Checks GET / and GET /health
- Sends initialize and a count call to POST /
Usage:
  python scripts/smoke_server.py http://<host>:<port>
Defaults to http://127.0.0.1:8000 if not provided.
"""
import json
import sys

import httpx


def main() -> int:
    base_url = sys.argv[1] if len(sys.argv) > 1 else "http://127.0.0.1:8000"
    print(f"Testing balseg server at: {base_url}")

    with httpx.Client(base_url=base_url, timeout=5) as client:
        try:
            for path in ("/", "/health"):
                response = client.get(path)
                print(f"GET {path} -> status={response.status_code}")
                print(response.text[:500] + ("..." if len(response.text) > 500 else ""))

            for request_id, (method, params) in enumerate([
                ("initialize", {"protocolVersion": "2024-11-05"}),
                ("tools/call", {"name": "count", "arguments": {"family": "s", "L": 5, "h": 2}}),
            ], start=1):
                response = client.post("/", json={"jsonrpc": "2.0", "id": request_id, "method": method, "params": params})
                print(f"POST / {method} -> status={response.status_code}")
                print(json.dumps(response.json(), indent=2))
        except httpx.HTTPError as e:
            print(f"❌ Connection failed: {e}")
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
