import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
GRAPHS = ROOT / "graphs"
SCHEMAS = ROOT / "docs" / "schemas"


@pytest.fixture(scope="session")
def graphs_dir():
    return GRAPHS


@pytest.fixture(scope="session")
def cli():
    """Runs the CLI and returns (exit code, stdout, stderr).

    Uses the binary named by ARTINMEM_CLI when set, otherwise the in-process
    entry point of the python module.
    """
    binary = os.environ.get("ARTINMEM_CLI")
    if binary:
        def run(*args):
            p = subprocess.run([binary, *map(str, args)], capture_output=True, text=True)
            return p.returncode, p.stdout, p.stderr
    else:
        import artinmem

        def run(*args):
            return artinmem.run_cli([str(a) for a in args])
    return run


@pytest.fixture(scope="session")
def validate():
    jsonschema = pytest.importorskip("jsonschema")
    from referencing import Registry, Resource

    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(schema)))
    registry = Registry().with_resources(resources)

    def check(name, instance):
        schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator(schema, registry=registry).validate(instance)
    return check
