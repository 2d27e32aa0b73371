"""End-to-end tour: poll a synthetic web, analyze, cluster, aggregate.

Builds two outlets with RSS feeds served from memory, walks them through
the full service (crawl -> stage chain -> clustering -> aggregation), and
prints the media profiles and topic statistics that the HTTP API would
serve. No network access is needed; the fetcher transport is a dict.
"""

import json
import tempfile
from pathlib import Path

from newsflow.ingest import Fetcher
from newsflow.pipeline import NewsflowService, PipelineConfig

RATE_BODIES = [
    "The central bank raised interest rates by a quarter point as inflation "
    "stayed above target. Bond yields climbed after the rate decision.",
    "Policymakers voted to raise interest rates again, citing inflation "
    "pressure. Markets had priced in the rate increase for weeks.",
    "Higher interest rates pushed mortgage costs up while the bank signaled "
    "more tightening if inflation persists.",
    "Analysts expect the rate increase to slow inflation by next quarter, "
    "though the bank left the door open to further hikes.",
]
FLOOD_BODIES = [
    "Heavy rain flooded coastal towns overnight and rescue crews evacuated "
    "residents from low lying streets near the river.",
    "Flood water cut off two coastal villages after the river burst its "
    "banks; rain is forecast to continue through the weekend.",
    "Emergency services deployed pumps as flood levels rose along the coast "
    "and rainfall records fell for a third day.",
    "Residents returned to flooded homes as the rain eased, with the river "
    "still above its danger mark along the coast.",
]


def article_page(title, body):
    paragraphs = "".join(f"<p>{s.strip()}.</p>" for s in body.split(".") if s.strip())
    return f"<html><head><title>{title}</title></head><body>{paragraphs}</body></html>"


def build_site():
    """One RSS feed and four article pages per outlet, all in memory."""
    site = {}
    for medium, host in (("m-ledger", "ledger.example"), ("m-horizon", "horizon.example")):
        items = []
        stories = [
            (f"Central bank raises rates ({medium})", RATE_BODIES[0 if medium == "m-ledger" else 1]),
            (f"Rate increase hits borrowers ({medium})", RATE_BODIES[2 if medium == "m-ledger" else 3]),
            (f"Floods hit coastal towns ({medium})", FLOOD_BODIES[0 if medium == "m-ledger" else 1]),
            (f"River bursts banks ({medium})", FLOOD_BODIES[2 if medium == "m-ledger" else 3]),
        ]
        for n, (title, body) in enumerate(stories):
            url = f"https://{host}/story-{n}"
            site[url] = article_page(title, body).encode()
            items.append(
                f"<item><title>{title}</title><link>{url}</link>"
                f"<pubDate>Fri, 01 Aug 2025 {9 + n}:00:00 GMT</pubDate></item>"
            )
        site[f"https://{host}/feed"] = (
            "<rss><channel>" + "".join(items) + "</channel></rss>"
        ).encode()
    return site


def write_inputs(root):
    (root / "sources.json").write_text(json.dumps([
        {"id": "s-ledger", "medium_id": "m-ledger", "kind": "rss",
         "url": "https://ledger.example/feed", "poll_interval": 900,
         "country": "us", "language": "en"},
        {"id": "s-horizon", "medium_id": "m-horizon", "kind": "rss",
         "url": "https://horizon.example/feed", "poll_interval": 900,
         "country": "gb", "language": "en"},
    ]))
    (root / "claims.json").write_text(json.dumps([
        {"claim_id": "rates-up", "topic_id": "rates",
         "text": "The central bank raised interest rates"},
    ]))
    (root / "citations.csv").write_text(
        "user_id,group,medium_id,topic_id,count\n"
        "u1,right,m-ledger,rates,9\n"
        "u2,left,m-ledger,rates,3\n"
        "u3,right,m-horizon,rates,2\n"
        "u4,left,m-horizon,rates,10\n"
    )
    (root / "labels.csv").write_text(
        "medium_id,factuality,bias\n"
        "m-ledger,high,center_right\n"
        "m-horizon,mixed,left\n"
    )
    return PipelineConfig(
        store_path=str(root / "articles.db"),
        queue_dir=str(root / "queue"),
        sources_path=str(root / "sources.json"),
        claims_path=str(root / "claims.json"),
        citations_path=str(root / "citations.csv"),
        source_labels_path=str(root / "labels.csv"),
    )


def main():
    root = Path(tempfile.mkdtemp(prefix="newsflow-demo-"))
    print(f"working directory: {root}\n")

    site = build_site()
    config = write_inputs(root)

    with NewsflowService(config) as svc:
        fetcher = Fetcher(transport=site.__getitem__, host_delay=0.0)
        polled = svc.poll_once(fetcher)
        processed = svc.process()
        print(f"polled {polled} raw documents, {processed} stage deliveries")
        print(f"store now holds {len(svc.store)} articles\n")

        result = svc.run_clustering_once()
        titles = {a.id: a.title for a in svc.store.articles()}
        print(f"clustering produced {len(result.stories)} stories:")
        for story in result.stories:
            print(f"  {story.id}")
            for aid in sorted(story.article_ids):
                print(f"    - {titles[aid]}")
        print()

        snapshot = svc.run_offline_once()
        for medium_id in sorted(snapshot.profiles):
            p = snapshot.profiles[medium_id]
            top = max(p.propaganda_distribution, key=p.propaganda_distribution.get)
            print(f"{medium_id}: {p.article_count} articles, "
                  f"propaganda mostly '{top}', "
                  f"factuality={p.factuality}, bias={p.bias}")
            for v in p.valences:
                print(f"  valence on '{v.topic_id}': {v.score:+.2f} ({v.label})")
            for claim_id, cs in sorted(p.stance_by_claim.items()):
                lead = max(cs.distribution, key=cs.distribution.get)
                print(f"  claim '{claim_id}': mostly '{lead}', "
                      f"coverage {cs.coverage:.0%}")
        print()

        for topic_id, stats in sorted(snapshot.topic_stats.items()):
            print(f"topic {topic_id}: {stats.total_articles} articles "
                  f"({stats.total_propagandistic} propagandistic), "
                  f"countries {dict(stats.countries)}")

    print("\nto explore the same data over HTTP:")
    print(f"  newsflow serve --config <config.json pointing at {root}>")


if __name__ == "__main__":
    main()
