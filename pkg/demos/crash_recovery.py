"""Crash a pipeline stage mid-stream and recover without losing data.

Runs the same forty documents twice: once cleanly, once with the
propaganda stage killed partway through. The restarted run resumes from
committed offsets and ends with a byte-identical article store. A final
full redelivery shows that duplicates change nothing.
"""

import json
import tempfile
from datetime import datetime, timezone
from pathlib import Path

from newsflow.ingest import ArticleStore, FeedSource, RawDocument, raw_document_to_dict
from newsflow.pipeline import (
    TOPIC_RAW,
    MessageQueue,
    StageDescriptor,
    StageRunner,
    article_stages,
)
from newsflow.profiles import Claim

NOW = datetime(2025, 8, 1, 12, 0, tzinfo=timezone.utc)
SOURCES = {
    "s1": FeedSource(id="s1", medium_id="m1", kind="rss",
                     url="https://news.example/feed", poll_interval=900,
                     country="us", language="en")
}
CLAIMS = (Claim("c1", "The central bank raised interest rates", "t1"),)


class Kill(BaseException):
    """Raised past the retry wrapper, like a killed process."""


def make_docs(n=40):
    return [
        RawDocument(
            f"https://news.example/{i}",
            NOW,
            f"<html><head><title>Story {i}</title></head><body>"
            f"<p>Quarter {i} results improved and analysts reacted.</p>"
            f"</body></html>",
            "s1",
        )
        for i in range(n)
    ]


def publish(queue, docs):
    queue.create_topic(TOPIC_RAW)
    for doc in docs:
        queue.publish(TOPIC_RAW, json.dumps(raw_document_to_dict(doc)).encode())


def drain(queue, store, kill_stage=None, kill_call=None):
    calls = {"n": 0}

    def wrap(desc):
        if desc.name != kill_stage:
            return desc

        def handler(message, _inner=desc.handler):
            calls["n"] += 1
            if calls["n"] == kill_call:
                raise Kill()
            return _inner(message)

        return StageDescriptor(desc.name, desc.input_topic, desc.output_topic,
                               handler, desc.parallelism)

    for desc in article_stages(store, SOURCES, claims=CLAIMS):
        StageRunner(wrap(desc), queue).drain()


def show_lag(queue, store, label):
    lagging = []
    for desc in article_stages(store, SOURCES, claims=CLAIMS):
        if desc.input_topic not in queue.topics():
            continue
        lag = queue.lag(desc.input_topic, desc.name)
        if lag:
            lagging.append(f"{desc.name}: {lag} behind on {desc.input_topic}")
    print(f"{label}: " + ("; ".join(lagging) if lagging else "all caught up"))


def main():
    root = Path(tempfile.mkdtemp(prefix="newsflow-crash-"))
    docs = make_docs()

    baseline = root / "baseline.jsonl"
    with MessageQueue(root / "q-clean") as queue, ArticleStore() as store:
        publish(queue, docs)
        drain(queue, store)
        store.export_jsonl(baseline)
    print(f"clean run stored {len(docs)} articles\n")

    qdir = root / "q-faulty"
    with ArticleStore(root / "faulty.db") as store:
        with MessageQueue(qdir) as queue:
            publish(queue, docs)
            try:
                drain(queue, store, kill_stage="propaganda", kill_call=15)
            except Kill:
                print("propaganda stage died on its 15th message")
                show_lag(queue, store, "lag at crash")

        # a fresh handle on the same directory: the restart recovers
        # everything from committed offsets on disk
        with MessageQueue(qdir) as queue:
            drain(queue, store)
            show_lag(queue, store, "lag after restart")

        recovered = root / "recovered.jsonl"
        store.export_jsonl(recovered)
        same = recovered.read_bytes() == baseline.read_bytes()
        print(f"store byte-identical to clean run: {same}\n")

        with MessageQueue(qdir) as queue:
            publish(queue, docs)
            drain(queue, store)
        redelivered = root / "redelivered.jsonl"
        store.export_jsonl(redelivered)
        same = redelivered.read_bytes() == baseline.read_bytes()
        print(f"after redelivering all {len(docs)} documents, "
              f"store unchanged: {same}")


if __name__ == "__main__":
    main()
