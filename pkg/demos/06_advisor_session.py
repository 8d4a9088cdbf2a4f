#!/usr/bin/env python3
"""Drive a live search through the HTTP advisor service.

Starts an ephemeral advisor in-process, opens a session on the demo
poset, previews both hypothetical outcomes before each commit, and
answers from the demo ideal until the service concludes.
"""

import json
import threading
import urllib.request

from idealsearch.advisor import make_server
from idealsearch.fixtures import demo_ideal, demo_poset

server = make_server(port=0)
threading.Thread(target=server.serve_forever, daemon=True).start()
base = "http://127.0.0.1:%d" % server.server_address[1]
print("advisor at", base)


def call(method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(base + path, data=data, method=method)
    if data:
        req.add_header("Content-Type", "application/json")
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


poset = demo_poset()
ideal = demo_ideal()
payload = call("POST", "/sessions", {"poset": poset.to_json_obj(), "k": 3})
session = payload["id"]
print(f"session {session[:8]}..., first recommendation: {payload['decision']}")

while payload["decision"]["kind"] == "query":
    node = payload["decision"]["node"]
    preview = call("GET", f"/sessions/{session}/whatif")
    print(f"\nrecommended node {node} (height {payload['decision']['height']},"
          f" rule {payload['decision']['branch']})")
    print(f"  if yes: {len(preview['yes']['alive'])} nodes stay,"
          f" budget {preview['yes']['budget']}")
    print(f"  if no:  {len(preview['no']['alive'])} nodes stay,"
          f" budget {preview['no']['budget']}")
    answer = ideal.contains(poset, node)
    payload = call("POST", f"/sessions/{session}/answer",
                   {"node": node, "positive": answer})
    print(f"  observed: {'yes' if answer else 'no'};"
          f" {len(payload['alive'])} nodes remain")

print("\nconcluded:", payload["transcript"]["result"])
print("transcript entries:", len(payload["transcript"]["entries"]))
server.shutdown()
