"""chainstage command line: validate, rehearse, export, serve.

Exit codes: 0 success, 1 domain failure (invalid design, unknown session,
provider error), 2 usage or I/O error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from chainstage.cli.client import make_client

PERSONAS = ("aggressive", "upstander", "passive")


@click.group()
def cli():
    """Author dialogue-tree chatbots and rehearse them against simulated students."""


def _read_file(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        click.echo(f"cannot read {path}: {exc}", err=True)
        sys.exit(2)


def _design_id_of(document: bytes) -> str:
    try:
        return json.loads(document)["design_id"]
    except (ValueError, KeyError, TypeError):
        return "draft"


@cli.command()
@click.argument("design_file", type=click.Path(path_type=Path))
@click.option("--json", "as_json", is_flag=True, help="machine-readable report")
@click.option("--server", default=None, help="studio service base URL (default: in-process)")
def validate(design_file: Path, as_json: bool, server: str | None):
    """Check a design file; exit 0 only if it has no violations."""
    document = _read_file(design_file)
    client = make_client(server)
    response = client.post(f"/designs/{_design_id_of(document)}/validate", content=document)
    if response.status_code != 200:
        body = response.json()
        if as_json:
            click.echo(json.dumps(body, indent=2, sort_keys=True))
        else:
            click.echo(f"{body.get('code', 'ERROR')}: {body.get('detail', '')}", err=True)
        sys.exit(1)
    violations = response.json()["violations"]
    if as_json:
        click.echo(json.dumps({"violations": violations}, indent=2, sort_keys=True))
    elif not violations:
        click.echo(f"{design_file}: OK")
    else:
        for violation in violations:
            click.echo(f"{violation['code']} at {violation['path']}: {violation['detail']}")
    sys.exit(0 if not violations else 1)


@cli.command()
@click.argument("design_file", type=click.Path(path_type=Path))
@click.option("--persona", default="all", type=click.Choice(("all",) + PERSONAS))
@click.option("--turns", default=10, type=click.IntRange(min=1), show_default=True,
              help="student turns per run (the opening comment counts as turn 1)")
@click.option("--provider", default="mock", type=click.Choice(("mock", "http")), show_default=True)
@click.option("--seed-rules", type=click.Path(path_type=Path), default=None,
              help="mock rule table (JSON) driving classifier/generator/persona outputs")
@click.option("--out", "out_dir", type=click.Path(path_type=Path), default=Path("rehearsal"),
              show_default=True, help="directory for transcripts and the report")
@click.option("--data-dir", type=click.Path(path_type=Path), default=None,
              help="persist sessions here (default: throwaway directory)")
@click.option("--server", default=None, help="studio service base URL (default: in-process)")
def rehearse(design_file, persona, turns, provider, seed_rules, out_dir, data_dir, server):
    """Run persona(s) against a design and write transcripts plus a report."""
    document = _read_file(design_file)
    if seed_rules is not None and not seed_rules.exists():
        click.echo(f"cannot read {seed_rules}: no such file", err=True)
        sys.exit(2)
    client = make_client(
        server,
        data_dir=data_dir,
        provider=provider,
        seed_rules=seed_rules,
        deterministic=True,
    )
    design_id = _design_id_of(document)
    stored = client.put(f"/designs/{design_id}", content=document)
    if stored.status_code not in (200, 201):
        body = stored.json()
        click.echo(f"{body.get('code', 'ERROR')}: {body.get('detail', '')}", err=True)
        for violation in body.get("violations") or []:
            click.echo(f"  {violation['code']} at {violation['path']}", err=True)
        sys.exit(1)

    out_dir.mkdir(parents=True, exist_ok=True)
    personas = PERSONAS if persona == "all" else (persona,)
    runs = []
    failure = None
    for name in personas:
        transcript_path = out_dir / f"{name}.jsonl"
        try:
            runs.append(_run_persona(client, design_id, name, turns, transcript_path))
        except RehearsalError as exc:
            # flush whatever the session produced before the failure
            _write_transcript(client, exc.session_id, transcript_path)
            failure = exc
            break
    report = _build_report(client, design_id, turns, runs)
    (out_dir / "report.json").write_text(
        json.dumps(report, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    if failure is not None:
        click.echo(f"rehearsal failed for {failure.persona}: {failure}", err=True)
        sys.exit(1)
    click.echo(
        f"rehearsed {len(runs)} persona(s), coverage "
        f"{report['coverage']['visited']}/{report['coverage']['total']} reactions, "
        f"fallback rate {report['fallback_rate']:.2f}"
    )


class RehearsalError(Exception):
    def __init__(self, persona: str, session_id: str | None, detail: str):
        super().__init__(detail)
        self.persona = persona
        self.session_id = session_id


def _api_error(response) -> str:
    try:
        body = response.json()
        return f"{body.get('code', response.status_code)}: {body.get('detail', '')}"
    except ValueError:
        return f"HTTP {response.status_code}"


def _run_persona(client, design_id: str, persona: str, turns: int, transcript_path: Path) -> dict:
    suggested = client.post(
        f"/designs/{design_id}/suggest-comment", json={"persona": persona}
    )
    if suggested.status_code != 200:
        raise RehearsalError(persona, None, _api_error(suggested))
    comment = suggested.json()["text"]
    started = client.post("/sessions", json={"design_id": design_id, "comment": comment})
    if started.status_code != 201:
        raise RehearsalError(persona, None, _api_error(started))
    session_id = started.json()["session"]["session_id"]
    fallbacks = started.json()["session"]["fallback_count"]

    for _ in range(turns - 1):
        suggestion = client.get(
            f"/sessions/{session_id}/suggestions", params={"persona": persona}
        )
        if suggestion.status_code != 200:
            raise RehearsalError(persona, session_id, _api_error(suggestion))
        reply = client.post(
            f"/sessions/{session_id}/messages", json={"text": suggestion.json()["text"]}
        )
        if reply.status_code != 200:
            raise RehearsalError(persona, session_id, _api_error(reply))
        fallbacks = reply.json()["session"]["fallback_count"]

    _write_transcript(client, session_id, transcript_path)
    return {
        "persona": persona,
        "transcript": transcript_path.name,
        "session_id": session_id,
        "student_turns": turns,
        "fallbacks": fallbacks,
    }


def _write_transcript(client, session_id: str | None, path: Path) -> None:
    if session_id is None:
        path.write_text("", encoding="utf-8")
        return
    response = client.get(f"/sessions/{session_id}/transcript")
    path.write_text(response.text if response.status_code == 200 else "", encoding="utf-8")


def _build_report(client, design_id: str, turns: int, runs: list[dict]) -> dict:
    design = client.get(f"/designs/{design_id}").json()
    reaction_ids = {
        node_id for node_id, node in design["nodes"].items() if node["kind"] == "reaction"
    }
    visited: set[str] = set()
    total_student_turns = 0
    total_fallbacks = 0
    for run in runs:
        transcript = client.get(f"/sessions/{run['session_id']}/transcript")
        for line in transcript.text.splitlines():
            if not line:
                continue
            turn = json.loads(line)
            if turn["speaker"] == "student":
                total_student_turns += 1
            elif turn["origin"] in reaction_ids:
                visited.add(turn["origin"])
        total_fallbacks += run["fallbacks"]
    report_runs = [
        {k: run[k] for k in ("persona", "transcript", "student_turns", "fallbacks")}
        for run in runs
    ]
    return {
        "design_id": design_id,
        "turns_requested": turns,
        "runs": report_runs,
        "coverage": {
            "visited": len(visited),
            "total": len(reaction_ids),
            "visited_reaction_ids": sorted(visited),
        },
        "fallback_rate": (total_fallbacks / total_student_turns) if total_student_turns else 0.0,
    }


@cli.command()
@click.argument("session_id")
@click.option("--format", "fmt", default="jsonl", type=click.Choice(("jsonl", "markdown")),
              show_default=True)
@click.option("--data-dir", type=click.Path(path_type=Path), default=None,
              help="data directory of the studio service that owns the session")
@click.option("--server", default=None, help="studio service base URL (default: in-process)")
@click.option("--out", "out_file", type=click.Path(path_type=Path), default=None,
              help="write here instead of stdout")
def export(session_id, fmt, data_dir, server, out_file):
    """Render a stored session transcript as JSONL or teacher-readable markdown."""
    client = make_client(server, data_dir=data_dir)
    response = client.get(f"/sessions/{session_id}/transcript")
    if response.status_code != 200:
        click.echo(_api_error(response), err=True)
        sys.exit(1)
    body = response.text
    if fmt == "markdown":
        body = _to_markdown(body)
    if out_file is not None:
        out_file.write_text(body, encoding="utf-8")
    else:
        click.echo(body, nl=False)


def _to_markdown(jsonl: str) -> str:
    blocks = []
    for line in jsonl.splitlines():
        if not line:
            continue
        turn = json.loads(line)
        speaker = "Chatbot" if turn["speaker"] == "chatbot" else "Student"
        blocks.append(f"**{speaker}:** {turn['text']}")
    return "\n\n".join(blocks) + ("\n" if blocks else "")


@cli.command()
@click.option("--data-dir", type=click.Path(path_type=Path), default=Path("chainstage-data"),
              show_default=True)
@click.option("--listen", default="127.0.0.1:8800", show_default=True,
              help="host:port to bind")
@click.option("--provider", default=None, type=click.Choice(("mock", "http")),
              help="completion backend (default: CHAINSTAGE_PROVIDER or mock)")
@click.option("--seed-rules", type=click.Path(path_type=Path), default=None)
@click.option("--expose", is_flag=True, help="bind 0.0.0.0 instead of localhost")
def serve(data_dir, listen, provider, seed_rules, expose):
    """Run the studio service."""
    import os
    import uvicorn

    from chainstage.cli.client import build_gateway
    from chainstage.service.app import ServiceConfig, create_app

    host, _, port = listen.partition(":")
    if expose:
        host = "0.0.0.0"
    provider = provider or os.environ.get("CHAINSTAGE_PROVIDER", "mock")
    app = create_app(
        ServiceConfig(data_dir=data_dir, gateway=build_gateway(provider, seed_rules))
    )
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8800))


if __name__ == "__main__":
    cli()
