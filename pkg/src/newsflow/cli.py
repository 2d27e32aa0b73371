"""Command-line entry points.

Subcommands cover day-to-day operation (run, serve, ingest, replay,
lag, export, import) plus the corpus clustering evaluator. Everything
prints JSON on stdout so output can be piped.
"""

from __future__ import annotations

import argparse
import json
import logging
import signal
import sys
import time
from datetime import datetime, timezone
from pathlib import Path
from types import SimpleNamespace

from .clustering.params import ClusteringParams
from .clustering.metrics import bcubed_f1, pairwise_f1
from .clustering.topics import cluster_stories
from .errors import NewsflowError
from .ingest.articles import raw_document_from_dict
from .pipeline.config import PipelineConfig, load_config
from .pipeline.service import NewsflowService

log = logging.getLogger(__name__)


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=True, ensure_ascii=False)
    sys.stdout.write("\n")


def _config(args) -> PipelineConfig:
    return load_config(args.config) if args.config else load_config()


def _parse_stamp(value: str) -> datetime:
    stamp = datetime.fromisoformat(value.replace("Z", "+00:00"))
    if stamp.tzinfo is None:
        stamp = stamp.replace(tzinfo=timezone.utc)
    return stamp


# ---------------------------------------------------------------- commands

def cmd_run(args) -> int:
    """Poll feeds, drain stages, and keep the periodic jobs ticking."""
    with NewsflowService(_config(args)) as svc:
        if args.once:
            polled = svc.poll_once() if svc.sources else 0
            processed = svc.process()
            svc.run_clustering_once()
            snapshot = svc.run_offline_once()
            _emit({
                "polled": polled,
                "processed": processed,
                "articles": len(svc.store),
                "stories": len(snapshot.stories),
            })
            return 0
        svc.start()
        stop = []
        signal.signal(signal.SIGINT, lambda *_: stop.append(True))
        signal.signal(signal.SIGTERM, lambda *_: stop.append(True))
        log.info("pipeline running; interrupt to stop")
        while not stop:
            if svc.sources:
                svc.poll_once()
            svc.process()
            time.sleep(args.poll_every)
    return 0


def cmd_serve(args) -> int:
    """Seed a snapshot from the store and serve the HTTP API."""
    import uvicorn

    from .api.app import create_app

    config = _config(args)
    web_dir = Path(args.web) if args.web else None
    if web_dir is not None and not web_dir.is_dir():
        raise NewsflowError(f"web directory not found: {web_dir}")
    with NewsflowService(config) as svc:
        svc.process()
        svc.run_offline_once()
        svc.start()
        app = create_app(svc.holder, web_dir=web_dir)
        uvicorn.run(app, host=args.host, port=args.port or config.api_port)
    return 0


def cmd_ingest(args) -> int:
    """Enqueue raw documents from a JSON Lines file and drain the chain."""
    with open(args.docs, encoding="utf-8") as handle:
        docs = [
            raw_document_from_dict(json.loads(line))
            for line in handle
            if line.strip()
        ]
    with NewsflowService(_config(args)) as svc:
        enqueued = svc.enqueue(docs)
        processed = svc.process()
        _emit({
            "enqueued": enqueued,
            "processed": processed,
            "articles": len(svc.store),
        })
    return 0


def cmd_replay(args) -> int:
    with NewsflowService(_config(args)) as svc:
        svc.queue.replay(args.topic, args.group, args.offset)
        _emit({
            "topic": args.topic,
            "group": args.group,
            "committed": svc.queue.committed(args.topic, args.group),
            "lag": svc.queue.lag(args.topic, args.group),
        })
    return 0


def cmd_lag(args) -> int:
    with NewsflowService(_config(args)) as svc:
        table = {}
        for topic in svc.queue.topics():
            row = {}
            for group in svc.queue.groups(topic):
                row[group] = svc.queue.lag(topic, group)
            table[topic] = {"end_offset": svc.queue.end_offset(topic),
                            "groups": row}
        _emit(table)
    return 0


def cmd_export(args) -> int:
    with NewsflowService(_config(args)) as svc:
        _emit({"exported": svc.store.export_jsonl(args.out)})
    return 0


def cmd_import(args) -> int:
    with NewsflowService(_config(args)) as svc:
        _emit({"imported": svc.store.import_jsonl(args.src)})
    return 0


def cmd_evaluate_clusters(args) -> int:
    """Cluster a JSONL corpus and score it against gold labels if given."""
    articles = []
    gold = {}
    with open(args.input, encoding="utf-8") as handle:
        for i, line in enumerate(handle):
            if not line.strip():
                continue
            record = json.loads(line)
            if "published_at" not in record:
                raise NewsflowError(f"line {i + 1}: missing published_at")
            aid = str(record.get("id", f"a{i}"))
            articles.append(SimpleNamespace(
                id=aid,
                title=str(record.get("title", "")),
                body=str(record.get("body", "")),
                published_at=_parse_stamp(record["published_at"]),
                language=str(record.get("language", "en")),
            ))
            if record.get(args.gold_field) is not None:
                gold[aid] = str(record[args.gold_field])

    params = ClusteringParams(
        window_days=args.window_days,
        window_overlap_days=args.overlap_days,
        t1=args.t1,
        t2=args.t2,
        seed=args.seed,
        weighted_edges=not args.binary_edges,
        min_df=args.min_df,
    )
    result = cluster_stories(articles, params)
    predicted = {
        a.id: result.assignments.get(a.id, a.id) for a in articles
    }
    if args.assignments:
        with open(args.assignments, "w", encoding="utf-8") as handle:
            for a in articles:
                handle.write(json.dumps(
                    {"article_id": a.id, "story_id": predicted[a.id]}
                ) + "\n")

    report = {"articles": len(articles), "stories": len(result.stories)}
    if gold:
        scored = {aid: predicted[aid] for aid in gold}
        report["bcubed"] = bcubed_f1(scored, gold)
        report["pairwise"] = pairwise_f1(scored, gold)
    _emit(report)
    return 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newsflow",
        description="News aggregation engine: ingest, analyze, cluster, serve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--config", default=None, help="pipeline config JSON")
        p.set_defaults(fn=fn)
        return p

    run = add("run", cmd_run, "poll feeds and drain the stage chain")
    run.add_argument("--once", action="store_true",
                     help="one poll/process/cluster/aggregate pass, then exit")
    run.add_argument("--poll-every", type=float, default=60.0,
                     help="seconds between poll passes")

    serve = add("serve", cmd_serve, "serve the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=None,
                       help="overrides the configured api_port")
    serve.add_argument("--web", default=None,
                       help="directory of prebuilt web UI assets to serve at /")

    ingest = add("ingest", cmd_ingest, "enqueue raw documents from JSONL")
    ingest.add_argument("docs", help="JSON Lines file of raw documents")

    replay = add("replay", cmd_replay, "rewind a consumer group's offset")
    replay.add_argument("--topic", required=True)
    replay.add_argument("--group", required=True)
    replay.add_argument("--offset", type=int, default=0)

    add("lag", cmd_lag, "show per-topic consumer lag")

    export = add("export", cmd_export, "dump the article store as JSONL")
    export.add_argument("out", help="output path")

    imp = add("import", cmd_import, "load articles from an exported JSONL")
    imp.add_argument("src", help="input path")

    ev = sub.add_parser("evaluate-clusters",
                        help="cluster a JSONL corpus and score against gold")
    ev.set_defaults(fn=cmd_evaluate_clusters)
    ev.add_argument("--input", required=True, help="JSON Lines articles")
    ev.add_argument("--gold-field", default="cluster_id",
                    help="record field holding the gold cluster id")
    ev.add_argument("--assignments", default=None,
                    help="write article->story assignments to this JSONL file")
    ev.add_argument("--window-days", type=int, default=6)
    ev.add_argument("--overlap-days", type=int, default=3)
    ev.add_argument("--t1", type=float, default=0.31)
    ev.add_argument("--t2", type=float, default=0.8)
    ev.add_argument("--seed", type=int, default=0)
    ev.add_argument("--min-df", type=int, default=2)
    ev.add_argument("--binary-edges", action="store_true",
                    help="drop cosine weights from graph edges")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except NewsflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
