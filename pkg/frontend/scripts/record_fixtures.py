"""Record real service responses into a replayable fixture tree.

Run from the repository root (needs the clusterq package importable):

    python3 frontend/scripts/record_fixtures.py

The fixture maps "history|action" keys to verbatim JSON responses; the test
FakeTransport replays them with the same state semantics as the service
(mutate appends, undo pops, whatif reads only).
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from clusterq.service import create_app


def record(graph: str, parts, out_path: Path, depth_paths) -> None:
    client = TestClient(create_app())
    created = client.post("/session", json={"graph": graph, "parts": parts})
    created.raise_for_status()
    sid = created.json()["id"]
    transitions: dict[str, dict] = {}

    def key(history, action):
        return f"{'.'.join(history)}|{action}"

    # the service is stateful; each recursion ends with the undo that
    # restores the parent state (and records the undo response on the way)
    def walk(history):
        hkey = ".".join(history)
        r = client.get(f"/session/{sid}")
        transitions[key(history, "get")] = r.json()
        for vertex in ["1", "2", "3"]:
            r = client.get(f"/session/{sid}/whatif/{vertex}")
            transitions[key(history, f"whatif:{vertex}")] = r.json()
            r = client.get(f"/session/{sid}/variable/{vertex}")
            transitions[key(history, f"variable:{vertex}")] = r.json()
        for vertex in depth_paths.get(hkey, []):
            r = client.post(f"/session/{sid}/mutate", json={"vertex": vertex})
            transitions[key(history, f"mutate:{vertex}")] = r.json()
            walk(history + [vertex])
            r = client.post(f"/session/{sid}/undo")
            transitions[key(history + [vertex], "undo")] = r.json()

    walk([])
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(json.dumps(
        {"create": created.json(), "transitions": transitions},
        indent=1, sort_keys=True))
    print(f"wrote {out_path} ({len(transitions)} transitions)")


if __name__ == "__main__":
    here = Path(__file__).resolve().parent.parent
    record("a3", [["1", "3"], ["2"]], here / "test" / "fixtures" / "a3.json",
           {
               "": ["1", "2", "3"],
               "1": ["1", "2"],
               "2": ["1", "2"],
               "2.1": ["1"],
               "2.1.1": ["3"],
               "2.1.1.3": ["3"],
               "3": ["3"],
           })
