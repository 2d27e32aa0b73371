"""Topics, stories, window merging, and the end-to-end clustering driver."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Mapping, Sequence

from newsflow.clustering.graph import build_graph
from newsflow.clustering.louvain import louvain
from newsflow.clustering.params import ClusteringParams
from newsflow.clustering.windows import Window, make_windows
from newsflow.errors import EmptyCorpus
from newsflow.textproc import SparseVector, cosine, fit_vocabulary, preprocess, tfidf


def _content_id(prefix: str, article_ids: frozenset[str]) -> str:
    digest = hashlib.sha1("|".join(sorted(article_ids)).encode("utf-8")).hexdigest()
    return f"{prefix}-{digest[:12]}"


def _mean_vector(vectors: Sequence[SparseVector]) -> SparseVector:
    acc: dict[int, float] = {}
    for v in vectors:
        for i, w in zip(v.indices, v.weights):
            acc[i] = acc.get(i, 0.0) + w
    n = len(vectors)
    return SparseVector.from_mapping({i: w / n for i, w in acc.items()})


@dataclass(frozen=True)
class Topic:
    """A within/between-window event cluster."""

    id: str
    article_ids: frozenset[str]
    centroid: SparseVector
    window_span: tuple[datetime, datetime]

    @classmethod
    def build(
        cls,
        article_ids: frozenset[str],
        vectors: Mapping[str, SparseVector],
        span: tuple[datetime, datetime],
    ) -> "Topic":
        members = [vectors[a] for a in sorted(article_ids)]
        return cls(_content_id("t", article_ids), article_ids, _mean_vector(members), span)


@dataclass(frozen=True)
class Story:
    """A set of topics merged by centroid similarity."""

    id: str
    topic_ids: frozenset[str]
    article_ids: frozenset[str]
    title: str = ""


def cluster_window(
    window: Window,
    vectors: Mapping[str, SparseVector],
    params: ClusteringParams,
):
    """Similarity graph + Louvain partition for one window."""
    graph = build_graph(
        window.article_ids, vectors, params.t1, weighted=params.weighted_edges
    )
    return graph, louvain(graph, seed=params.seed)


def merge_windows(
    prev_topics: Sequence[Topic],
    window: Window,
    partition: Mapping[str, int],
    vectors: Mapping[str, SparseVector],
) -> list[Topic]:
    """Fold one window's communities into the running topic list.

    A community sharing at least one article with an existing topic is
    unioned into it; overlap with several topics merges those topics
    transitively. Topics untouched by the window pass through. Output
    order is by smallest member article id, which makes reprocessing
    from scratch agree with incremental runs.
    """
    # union-find over previous topics and current communities
    parent: dict[str, str] = {}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: str, b: str) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            if rb < ra:  # keep the lexicographically smallest root
                ra, rb = rb, ra
            parent[rb] = ra

    communities: dict[int, set[str]] = {}
    for article_id, comm in partition.items():
        communities.setdefault(comm, set()).add(article_id)

    members: dict[str, set[str]] = {}
    spans: dict[str, list[datetime]] = {}
    by_article: dict[str, str] = {}
    for topic in prev_topics:
        key = f"topic:{topic.id}"
        parent[key] = key
        members[key] = set(topic.article_ids)
        spans[key] = [topic.window_span[0], topic.window_span[1]]
        for aid in topic.article_ids:
            by_article[aid] = key
    for comm, articles in sorted(communities.items()):
        key = f"comm:{comm}"
        parent[key] = key
        members[key] = set(articles)
        spans[key] = [window.start, window.end]
        for aid in articles:
            owner = by_article.get(aid)
            if owner is not None:
                union(key, owner)

    groups: dict[str, set[str]] = {}
    for key in parent:
        root = find(key)
        groups.setdefault(root, set()).update(members[key])

    merged: list[Topic] = []
    for root, articles in groups.items():
        keys = [k for k in parent if find(k) == root]
        start = min(spans[k][0] for k in keys)
        end = max(spans[k][1] for k in keys)
        merged.append(Topic.build(frozenset(articles), vectors, (start, end)))
    merged.sort(key=lambda t: min(t.article_ids))
    return merged


def merge_topics(
    topics: Sequence[Topic],
    t2: float = 0.8,
    *,
    vectors: Mapping[str, SparseVector] | None = None,
    titles: Mapping[str, str] | None = None,
) -> list[Story]:
    """Merge topics whose centroid cosine reaches t2 into stories.

    Connected components of the topic meta-graph become stories. When
    vectors and titles are supplied, each story takes the title of its
    centroid-closest article; ties break toward the smaller article id.
    """
    order = sorted(topics, key=lambda t: t.id)
    parent = {t.id: t.id for t in order}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, a in enumerate(order):
        for b in order[i + 1 :]:
            if cosine(a.centroid, b.centroid) >= t2:
                ra, rb = find(a.id), find(b.id)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)

    component: dict[str, list[Topic]] = {}
    for t in order:
        component.setdefault(find(t.id), []).append(t)

    stories = []
    for group in component.values():
        article_ids = frozenset().union(*(t.article_ids for t in group))
        title = ""
        if vectors is not None:
            center = _mean_vector([t.centroid for t in group])
            sims = {aid: cosine(vectors[aid], center) for aid in article_ids}
            best_sim = max(sims.values())
            best = min(aid for aid, s in sims.items() if s == best_sim)
            if titles is not None:
                title = titles.get(best, "")
        stories.append(
            Story(
                id=_content_id("s", article_ids),
                topic_ids=frozenset(t.id for t in group),
                article_ids=article_ids,
                title=title,
            )
        )
    stories.sort(key=lambda s: min(s.article_ids))
    return stories


@dataclass(frozen=True)
class ClusterResult:
    topics: tuple[Topic, ...]
    stories: tuple[Story, ...]
    assignments: Mapping[str, str] = field(default_factory=dict)  # article -> story


def cluster_stories(
    articles: Sequence[Any],
    params: ClusteringParams = ClusteringParams(),
) -> ClusterResult:
    """Run the full two-stage clustering over articles.

    Articles need id, title, body, published_at, and optionally
    language. Stage one clusters each sliding window with Louvain and
    merges overlapping windows through shared articles; stage two merges
    topic centroids into stories.
    """
    if not articles:
        return ClusterResult((), (), {})
    docs = {}
    titles = {}
    for a in articles:
        language = getattr(a, "language", "en") or "en"
        docs[a.id] = preprocess(f"{a.title}\n{a.body}", language)
        titles[a.id] = a.title
    try:
        vocab = fit_vocabulary(list(docs.values()), min_df=params.min_df)
    except EmptyCorpus:
        return ClusterResult((), (), {})
    vectors = {aid: tfidf(tokens, vocab) for aid, tokens in docs.items()}

    topics: list[Topic] = []
    for window in make_windows(articles, params):
        if not window.article_ids:
            continue
        _, partition = cluster_window(window, vectors, params)
        topics = merge_windows(topics, window, partition, vectors)
    stories = merge_topics(topics, params.t2, vectors=vectors, titles=titles)
    assignments = {
        aid: story.id for story in stories for aid in story.article_ids
    }
    return ClusterResult(tuple(topics), tuple(stories), assignments)
