"""Feature extraction: the 171-column manifest, extractors, and scaling."""

from .extract import (
    RECENT_SCORED_TWEETS,
    FeatureMatrix,
    FeatureModels,
    FeatureVector,
    assemble_feature_matrix,
    extract_row,
    funding_features,
    general_features,
    google_features,
    news_features,
    twitter_features,
)
from .io import read_matrix, write_matrix
from .manifest import (
    CATEGORICAL_WIDTH,
    NUMERIC_WIDTH,
    TOPIC_LABELS,
    TOTAL_WIDTH,
    FeatureDescriptor,
    FeatureManifest,
    build_manifest,
)
from .publishers import (
    PublisherRank,
    SiteRank,
    normalize_publisher,
    rank_publishers,
    rank_sites,
    registrable_domain,
)
from .scaling import ScalerParams, apply_minmax, fit_minmax

__all__ = [
    "CATEGORICAL_WIDTH",
    "NUMERIC_WIDTH",
    "RECENT_SCORED_TWEETS",
    "TOPIC_LABELS",
    "TOTAL_WIDTH",
    "FeatureDescriptor",
    "FeatureManifest",
    "FeatureMatrix",
    "FeatureModels",
    "FeatureVector",
    "PublisherRank",
    "ScalerParams",
    "SiteRank",
    "apply_minmax",
    "assemble_feature_matrix",
    "build_manifest",
    "extract_row",
    "fit_minmax",
    "funding_features",
    "general_features",
    "google_features",
    "news_features",
    "normalize_publisher",
    "rank_publishers",
    "rank_sites",
    "read_matrix",
    "registrable_domain",
    "twitter_features",
    "write_matrix",
]
