"""The /v1 HTTP API.

Read-only JSON over HTTP, versioned under /v1, errors always shaped as
{"error": {"code", "message"}} with code one of not_found, bad_request,
internal. Handlers are pure functions of the current snapshot.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from ..classifiers.frames import FRAME_LABELS
from ..classifiers.propaganda import LABELS as PROPAGANDA_LABELS
from ..classifiers.sourcelevel import hyper_partisanship
from ..clustering.topics import Story
from ..ingest.articles import Article, article_to_dict
from .snapshot import MediumInfo, Snapshot, SnapshotHolder

MAX_PAGE_SIZE = 100
RECENT_ARTICLES = 20


class ApiException(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _bad_request(message: str) -> ApiException:
    return ApiException(400, "bad_request", message)


def _not_found(message: str) -> ApiException:
    return ApiException(404, "not_found", message)


def _medium_info(snapshot: Snapshot, medium_id: str) -> MediumInfo:
    return snapshot.media.get(medium_id) or MediumInfo(medium_id, medium_id)


def _medium_dict(info: MediumInfo, brief: bool = False) -> dict:
    data = {"id": info.id, "name": info.name, "logo_url": info.logo_url}
    if not brief:
        data["country"] = info.country
        data["audience"] = dict(info.audience) if info.audience else None
    return data


def _article_summary(snapshot: Snapshot, article: Article) -> dict:
    return {
        "article_id": article.id,
        "title": article.title,
        "medium": _medium_dict(_medium_info(snapshot, article.medium_id), brief=True),
        "published_at": article.published_at.isoformat(),
        "propaganda_label": article.propaganda.label if article.propaganda else None,
        "language": article.language,
    }


def _story_articles(snapshot: Snapshot, story: Story) -> list[Article]:
    members = [snapshot.articles[aid] for aid in story.article_ids
               if aid in snapshot.articles]
    members.sort(key=lambda a: (a.published_at, a.id))
    members.reverse()  # newest first, ties broken by id descending
    return members


def _story_card(snapshot: Snapshot, story: Story) -> Optional[dict]:
    articles = _story_articles(snapshot, story)
    if not articles:
        return None
    return {
        "story_id": story.id,
        "title": story.title or articles[0].title,
        "updated_at": max(a.published_at for a in articles).isoformat(),
        "articles": [_article_summary(snapshot, a) for a in articles],
    }


def _aggregate_distributions(articles: Iterable[Article]) -> tuple[dict, dict]:
    """Mean frame distribution and propaganda label histogram."""
    frames = {frame: 0.0 for frame in FRAME_LABELS}
    labels = {label: 0 for label in PROPAGANDA_LABELS}
    framed = labeled = 0
    for article in articles:
        if article.frame_distribution is not None:
            framed += 1
            for frame, value in article.frame_distribution.items():
                frames[frame] += value
        if article.propaganda is not None:
            labeled += 1
            labels[article.propaganda.label] += 1
    frame_dist = {f: (v / framed if framed else 0.0) for f, v in frames.items()}
    label_dist = {l: (c / labeled if labeled else 0.0) for l, c in labels.items()}
    return frame_dist, label_dist


def create_app(
    holder: SnapshotHolder,
    web_dir: str | Path | None = None,
) -> FastAPI:
    """Build the API application over a snapshot holder.

    web_dir, when given, is a directory of prebuilt static assets (the
    reader UI) mounted at the root path. /v1 routes keep priority; the
    mount only sees paths nothing else matched.
    """
    app = FastAPI(title="newsflow", version="1.0.0", openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiException)
    async def api_error(request: Request, exc: ApiException):
        return JSONResponse(
            status_code=exc.status,
            content={"error": {"code": exc.code, "message": exc.message}},
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request: Request, exc: StarletteHTTPException):
        # Routing-level errors (unknown path, wrong method) get the same
        # envelope as everything else.
        if exc.status_code == 404:
            code = "not_found"
        elif exc.status_code < 500:
            code = "bad_request"
        else:
            code = "internal"
        return JSONResponse(
            status_code=exc.status_code,
            content={"error": {"code": code, "message": str(exc.detail)}},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "bad_request",
                               "message": "invalid query or path parameter"}},
        )

    @app.exception_handler(Exception)
    async def internal_error(request: Request, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"error": {"code": "internal", "message": "internal error"}},
        )

    @app.get("/v1/stories")
    def stories(lang: str = "en", page: int = 1, page_size: int = 20):
        # lang picks the translation variant; the identity translator
        # serves the original text either way, tagged per article.
        if lang not in ("en", "ar"):
            raise _bad_request(f"lang must be en or ar, got {lang!r}")
        if page < 1:
            raise _bad_request("page must be >= 1")
        if not 1 <= page_size <= MAX_PAGE_SIZE:
            raise _bad_request(f"page_size must be in [1, {MAX_PAGE_SIZE}]")
        snapshot = holder.get()
        ordered = []
        for story in snapshot.stories:
            members = _story_articles(snapshot, story)
            if not members:
                continue
            updated = max(a.published_at for a in members)
            ordered.append((updated, story.id, _story_card(snapshot, story)))
        ordered.sort(key=lambda row: (row[0], row[1]))
        ordered.reverse()
        cards = [card for _, _, card in ordered]
        start = (page - 1) * page_size
        return {
            "items": cards[start:start + page_size],
            "total": len(cards),
            "page": page,
            "page_size": page_size,
            "lang": lang,
        }

    @app.get("/v1/media/{medium_id}")
    def media_profile(medium_id: str):
        snapshot = holder.get()
        profile = snapshot.profiles.get(medium_id)
        if profile is None:
            raise _not_found(f"unknown medium {medium_id!r}")
        own = [a for a in snapshot.articles.values() if a.medium_id == medium_id]
        own.sort(key=lambda a: (a.published_at, a.id))
        own.reverse()
        return {
            "medium": _medium_dict(_medium_info(snapshot, medium_id)),
            "article_count": profile.article_count,
            "propaganda_distribution": dict(profile.propaganda_distribution),
            "frame_distribution": dict(profile.frame_distribution),
            "stance_by_claim": {
                claim_id: {
                    "distribution": dict(cs.distribution),
                    "coverage": cs.coverage,
                    "related_articles": cs.related_articles,
                }
                for claim_id, cs in profile.stance_by_claim.items()
            },
            "factuality": profile.factuality,
            "bias": profile.bias,
            "hyper_partisanship": (
                hyper_partisanship(profile.bias) if profile.bias else None
            ),
            "valences": [
                {"topic_id": v.topic_id, "score": v.score, "label": v.label}
                for v in profile.valences
            ],
            "recent_articles": [
                _article_summary(snapshot, a) for a in own[:RECENT_ARTICLES]
            ],
        }

    @app.get("/v1/topics/{slug}")
    def topic(slug: str):
        snapshot = holder.get()
        stats = snapshot.topic_stats.get(slug)
        if stats is None:
            raise _not_found(f"unknown topic {slug!r}")
        story = next((s for s in snapshot.stories if s.id == slug), None)
        members = _story_articles(snapshot, story) if story else []
        frame_dist, label_dist = _aggregate_distributions(members)
        total = stats.total_articles
        media_rows = [
            {
                "medium_id": medium_id,
                "name": _medium_info(snapshot, medium_id).name,
                "articles": counts.articles,
                "propagandistic_articles": counts.propagandistic_articles,
                "ratio": (counts.propagandistic_articles / counts.articles
                          if counts.articles else 0.0),
            }
            for medium_id, counts in stats.media.items()
        ]
        media_rows.sort(
            key=lambda r: (-r["propagandistic_articles"], -r["articles"], r["medium_id"])
        )
        card = _story_card(snapshot, story) if story else None
        return {
            "topic_id": stats.topic_id,
            "title": (story.title if story else None) or slug,
            "total_articles": total,
            "total_propagandistic": stats.total_propagandistic,
            "countries": dict(stats.countries),
            "country_ratio": {
                country: count / total for country, count in stats.countries.items()
            } if total else {},
            "media": media_rows,
            "frame_distribution": frame_dist,
            "propaganda_distribution": label_dist,
            "recent_stories": [card] if card else [],
        }

    @app.get("/v1/search")
    def search(q: str = "", type: str = ""):
        query = q.strip().lower()
        if not query:
            raise _bad_request("q must be non-empty")
        if type not in ("media", "topics"):
            raise _bad_request("type must be media or topics")
        snapshot = holder.get()
        if type == "media":
            ids = set(snapshot.profiles) | set(snapshot.media)
            candidates = [
                ("media", medium_id, _medium_info(snapshot, medium_id).name)
                for medium_id in ids
            ]
        else:
            candidates = [("topic", s.id, s.title or s.id) for s in snapshot.stories]
        ranked = []
        for kind, cid, name in candidates:
            haystacks = (name.lower(), cid.lower())
            if any(h.startswith(query) for h in haystacks):
                tier = 0
            elif any(query in h for h in haystacks):
                tier = 1
            else:
                continue
            ranked.append((tier, name.lower(), cid, kind, name))
        ranked.sort()
        items = [{"type": kind, "id": cid, "name": name}
                 for _, _, cid, kind, name in ranked]
        return {"items": items, "total": len(items)}

    @app.get("/v1/articles/{article_id}")
    def article(article_id: str):
        snapshot = holder.get()
        found = snapshot.articles.get(article_id)
        if found is None:
            raise _not_found(f"unknown article {article_id!r}")
        return {
            "article": article_to_dict(found),
            "medium": _medium_dict(_medium_info(snapshot, found.medium_id)),
        }

    if web_dir is not None:
        app.mount("/", StaticFiles(directory=web_dir, html=True), name="web")

    return app
