# Copyright 2026 The skrates Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the skrates CLI over the bundled sources, validates every JSON
output against docs/schemas and checks byte-identical reruns, CSV shape and
exit codes."""

import json
import pathlib
import re
import subprocess
import sys

import jsonschema

RATIONAL = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def main() -> int:
    binary, root = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (root / "docs" / "schemas").glob("*.json")}
    data = root / "data"
    failures = []

    def run(args):
        return subprocess.run([binary, *args], capture_output=True, text=True, check=False)

    for source in sorted(data.glob("*.json")):
        try:
            jsonschema.validate(json.loads(source.read_text()), schemas["source"])
        except jsonschema.ValidationError as ex:
            failures.append(f"{source.name}: {ex.message}")

    cases = []
    for source in sorted(data.glob("*.json")):
        s = str(source)
        vertices = json.loads(source.read_text())["vertices"]
        point = json.dumps({"r_K": "1", "r": {v: "1/2" for v in vertices}})
        cases += [
            ("entropy", ["entropy", "--source", s, "--set", ",".join(vertices[:2])]),
            ("mmi", ["mmi", "--source", s]),
            ("capacity", ["capacity", "--source", s]),
            ("bounds", ["bounds", "--source", s, "--point", point]),
            ("curve", ["curve", "--source", s, "--output", "json"]),
            ("greedy", ["greedy", "--source", s]),
            ("analyze", ["analyze", "--source", s, "--simulate"]),
        ]
        if source.name not in ("hyperedge3.json", "six_user.json"):
            cases += [
                ("pack", ["pack", "--source", s]),
                ("simulate", ["simulate", "--source", s, "--exhaustive"]),
            ]
    cases.append(("greedy", ["greedy", "--weights", '[["x", 3], ["y", "1/2"], ["z", 0]]']))

    for schema, args in cases:
        first, second = run(args), run(args + ["--threads", "2"])
        label = " ".join(args[:1] + [pathlib.Path(a).name for a in args[1:3]])
        if first.returncode != 0:
            failures.append(f"{label}: exit {first.returncode}: {first.stderr.strip()}")
            continue
        if first.stdout != second.stdout:
            failures.append(f"{label}: output differs between runs")
        try:
            jsonschema.validate(json.loads(first.stdout), schemas[schema])
        except (jsonschema.ValidationError, json.JSONDecodeError) as ex:
            failures.append(f"{label}: {getattr(ex, 'message', ex)}")

    csv = run(["curve", "--source", str(data / "triangle.json"), "--r-max", "3", "--step", "1/3"])
    lines = csv.stdout.split("\n")
    if csv.returncode != 0 or "\r" in csv.stdout or lines[0] != "R,upper_bound,achievable" or lines[-1] != "":
        failures.append("curve csv: bad header or line endings")
    for line in lines[1:-1]:
        if not all(RATIONAL.match(cell) for cell in line.split(",")):
            failures.append(f"curve csv: bad row {line!r}")

    for expected, args in [
        (1, ["pack", "--source", str(data / "six_user.json")]),
        (1, ["simulate", "--source", str(data / "hyperedge3.json")]),
        (2, ["capacity", "--source", str(data / "nonexistent.json")]),
        (2, ["bounds", "--source", str(data / "triangle.json"), "--point", '{"r_K": "x"}']),
        (2, ["mmi"]),
    ]:
        got = run(args).returncode
        if got != expected:
            failures.append(f"{' '.join(args[:1])}: exit {got}, want {expected}")

    for failure in failures:
        print("FAIL", failure)
    print(f"{len(cases)} outputs checked, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
