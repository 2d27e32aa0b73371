"""Two-stage clustering on a corpus with known structure.

Generates four topics with disjoint vocabularies plus shared noise,
spreads them over ten days, clusters with the default parameters, and
scores against the known grouping. Then sweeps the edge threshold to
show how t1 trades precision against recall.
"""

import random
from datetime import datetime, timedelta, timezone
from types import SimpleNamespace

from newsflow.clustering import ClusteringParams, cluster_stories
from newsflow.clustering.metrics import bcubed_f1, pairwise_f1

TOPICS = ("rates", "floods", "transfer", "chipset")


def make_corpus(seed=0, per_topic=15):
    rng = random.Random(seed)
    epoch = datetime(2025, 7, 1, tzinfo=timezone.utc)
    noise = [f"common{k}" for k in range(25)]
    articles, gold = [], {}
    for t, name in enumerate(TOPICS):
        vocab = [f"{name}{k}" for k in range(35)]
        for j in range(per_topic):
            tokens = rng.choices(vocab, k=32) + rng.choices(noise, k=4)
            rng.shuffle(tokens)
            aid = f"{name}-{j}"
            articles.append(SimpleNamespace(
                id=aid,
                title=f"{name} report {j}",
                body=" ".join(tokens),
                published_at=epoch + timedelta(days=rng.uniform(0, 10)),
                language="en",
            ))
            gold[aid] = name
    return articles, gold


def score(result, articles, gold):
    predicted = {a.id: result.assignments.get(a.id, a.id) for a in articles}
    return bcubed_f1(predicted, gold)["f1"], pairwise_f1(predicted, gold)["f1"]


def main():
    articles, gold = make_corpus()
    print(f"corpus: {len(articles)} articles across {len(TOPICS)} topics, "
          "disjoint vocabularies plus shared noise\n")

    result = cluster_stories(articles, ClusteringParams())
    b, p = score(result, articles, gold)
    print(f"default parameters -> {len(result.stories)} stories, "
          f"bcubed F1 {b:.3f}, pairwise F1 {p:.3f}")
    for story in result.stories:
        members = sorted(story.article_ids)
        names = sorted({m.rsplit("-", 1)[0] for m in members})
        print(f"  {story.id}: {len(members)} articles, drawn from {names}")
    print()

    print("threshold sweep (t1 = minimum cosine for a graph edge):")
    for t1 in (0.05, 0.31, 0.5, 0.7):
        result = cluster_stories(articles, ClusteringParams(t1=t1))
        b, p = score(result, articles, gold)
        print(f"  t1={t1:<4} -> {len(result.stories):>3} stories, "
              f"bcubed {b:.3f}, pairwise {p:.3f}")
    print()
    print("the floor is forgiving: weak cross-topic edges still get cut by "
          "modularity. Raising t1 past the within-topic similarity is what "
          "hurts, shattering topics before community detection can see them.")


if __name__ == "__main__":
    main()
